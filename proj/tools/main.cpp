#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewcode/capacity.hpp"
#include "skewcode/channel.hpp"
#include "skewcode/code.hpp"
#include "skewcode/graph.hpp"
#include "skewcode/rng.hpp"
#include "skewcode/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "error: cannot open %s for writing\n", path.c_str());
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

skewcode::SkewMode parse_mode(const std::string& s) {
    return s == "ternary" ? skewcode::SkewMode::Ternary : skewcode::SkewMode::Binary;
}

int cmd_capacity(int w_max, const std::string& format, const std::string& out) {
    std::string text;
    if (format == "csv") {
        text = skewcode::capacity_csv(w_max);
    } else if (format == "json") {
        text = skewcode::capacity_json(w_max) + "\n";
    } else {
        text = skewcode::capacity_text(w_max);
    }
    return write_output(out, text);
}

int cmd_codebook(int w, const std::string& format, const std::string& out) {
    const skewcode::Codebook cb = skewcode::build_codebook(w);
    std::string text;
    if (format == "json") {
        text = skewcode::codebook_to_json(cb) + "\n";
    } else {
        text = "w " + std::to_string(w) + " total " + std::to_string(cb.total()) + "\n";
        for (int h = 0; h <= w; ++h) {
            text += "h " + std::to_string(h) + " size " +
                    std::to_string(cb.class_size(h)) + "\n";
            for (const skewcode::OffsetTuple& x : cb.classes()[static_cast<std::size_t>(h)]) {
                text += "  " + skewcode::from_offsets(x, w).to_string() + "\n";
            }
        }
    }
    return write_output(out, text);
}

int cmd_graph(int w, int h, const std::string& out) {
    if (h > w) {
        std::fprintf(stderr, "error: --weight must be at most --w\n");
        return kExitUsage;
    }
    std::string text;
    if (h >= 0) {
        text = skewcode::to_edge_list(skewcode::build_component(w, h));
    } else {
        for (int k = 0; k <= w; ++k) {
            if (k > 0) text += "\n";
            text += skewcode::to_edge_list(skewcode::build_component(w, k));
        }
    }
    return write_output(out, text);
}

bool same_edges(const skewcode::WeightComponent& a, const skewcode::WeightComponent& b) {
    return a.vertices == b.vertices && a.adj == b.adj;
}

int cmd_verify(int w, const std::string& out) {
    using skewcode::SkewMode;
    using skewcode::TernaryBoundary;

    std::string report = "verify w=" + std::to_string(w) + "\n";
    bool all_pass = true;
    const auto check = [&](const std::string& name, bool ok) {
        report += name + ": " + (ok ? "pass" : "fail") + "\n";
        all_pass = all_pass && ok;
    };

    bool oracle_binary = true;
    bool oracle_relaxed = true;
    bool oracle_forced = true;
    for (int h = 0; h <= w; ++h) {
        const skewcode::WeightComponent analytic = skewcode::build_component(w, h);
        oracle_binary = oracle_binary &&
            same_edges(analytic, skewcode::oracle_component(w, h, SkewMode::Binary));
        oracle_relaxed = oracle_relaxed &&
            same_edges(analytic, skewcode::oracle_component(w, h, SkewMode::Ternary,
                                                            TernaryBoundary::Relaxed));
        oracle_forced = oracle_forced &&
            same_edges(analytic, skewcode::oracle_component(w, h, SkewMode::Ternary,
                                                            TernaryBoundary::Forced));
    }
    check("oracle edges, binary", oracle_binary);
    check("oracle edges, ternary relaxed", oracle_relaxed);
    check("oracle edges, ternary forced", oracle_forced);

    check("adjacency-reducing mapping", skewcode::verify_adjacency_reducing(w));

    const skewcode::Codebook cb = skewcode::build_codebook(w);
    bool independent = true;
    for (const auto& cls : cb.classes()) {
        for (std::size_t i = 0; i < cls.size() && independent; ++i) {
            for (std::size_t j = i + 1; j < cls.size() && independent; ++j) {
                independent = !skewcode::is_edge(cls[i], cls[j]);
            }
        }
    }
    check("codebook independence", independent);

    skewcode::BigInt mis_total = 0;
    bool classes_maximum = true;
    for (int h = 0; h <= w; ++h) {
        const auto mis = skewcode::max_independent_set(skewcode::build_component(w, h));
        mis_total += static_cast<std::uint64_t>(mis.size());
        classes_maximum = classes_maximum && mis.size() == cb.class_size(h);
    }
    check("independence numbers sum to F_w", mis_total == skewcode::fibonacci(w));
    check("classes are maximum independent sets", classes_maximum);

    report += all_pass ? "all checks passed\n" : "FAILED\n";
    const int rc = write_output(out, report);
    if (rc != kExitOk) return rc;
    return all_pass ? kExitOk : kExitFail;
}

int cmd_simulate(int w, std::uint64_t trials, std::uint64_t seed, const std::string& mode_name,
                 const std::string& out) {
    const skewcode::SkewMode mode = parse_mode(mode_name);
    const skewcode::Codebook cb = skewcode::build_codebook_index(w);
    std::mt19937_64 gen(seed);
    std::string text;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const skewcode::Message m{skewcode::random_message(gen, cb.total())};
        const skewcode::BinaryWord word = skewcode::encode(m, cb);
        const skewcode::SkewPattern skew = skewcode::random_skew(gen, w, mode);
        const skewcode::ReceivedBlock rx = skewcode::transmit(word, skew);
        if (skewcode::decode(rx, cb) != m) {
            std::fprintf(stderr, "simulate: decode mismatch at block %llu\n",
                         static_cast<unsigned long long>(t));
            return kExitFail;
        }
        skewcode::StreamRecord rec;
        rec.block = t;
        rec.message = m.index;
        rec.word = word.to_string();
        rec.arrivals = rx.arrivals;
        text += skewcode::to_json_line(rec) + "\n";
    }
    std::fprintf(stderr, "simulate: w=%d mode=%s trials=%llu seed=%llu\n", w, mode_name.c_str(),
                 static_cast<unsigned long long>(trials),
                 static_cast<unsigned long long>(seed));
    return write_output(out, text);
}

int cmd_roundtrip(int w, bool exhaustive, std::uint64_t trials, std::uint64_t seed,
                  const std::string& mode_name, const std::string& out) {
    using skewcode::SkewMode;
    using skewcode::TernaryBoundary;

    if (exhaustive && w > 8) {
        std::fprintf(stderr, "error: --exhaustive requires --w at most 8\n");
        return kExitUsage;
    }
    if (!exhaustive && trials == 0) {
        if (w <= 8) {
            exhaustive = true;
        } else {
            trials = 10000;
        }
    }

    const skewcode::Codebook cb = skewcode::build_codebook_index(w);
    std::string report;
    std::uint64_t failures = 0;

    if (exhaustive) {
        report = "roundtrip w=" + std::to_string(w) + " exhaustive\n";
        const struct {
            const char* name;
            SkewMode mode;
            TernaryBoundary boundary;
        } variants[] = {
            {"binary", SkewMode::Binary, TernaryBoundary::Forced},
            {"ternary relaxed", SkewMode::Ternary, TernaryBoundary::Relaxed},
            {"ternary forced", SkewMode::Ternary, TernaryBoundary::Forced},
        };
        for (const auto& v : variants) {
            std::uint64_t count = 0;
            std::uint64_t failed = 0;
            for (std::uint64_t i = 0; i < cb.total(); ++i) {
                const skewcode::Message m{i};
                const skewcode::BinaryWord word = skewcode::encode(m, cb);
                skewcode::for_each_skew(w, v.mode, v.boundary,
                                        [&](const skewcode::SkewPattern& skew) {
                    ++count;
                    if (skewcode::decode(skewcode::transmit(word, skew), cb) != m) ++failed;
                });
            }
            report += std::string(v.name) + ": " + std::to_string(count) + " trials, " +
                      std::to_string(failed) + " failures\n";
            failures += failed;
        }
    } else {
        const SkewMode mode = parse_mode(mode_name);
        report = "roundtrip w=" + std::to_string(w) + " mode=" + mode_name + " trials=" +
                 std::to_string(trials) + " seed=" + std::to_string(seed) + "\n";
        std::mt19937_64 gen(seed);
        for (std::uint64_t t = 0; t < trials; ++t) {
            const skewcode::Message m{skewcode::random_message(gen, cb.total())};
            const skewcode::BinaryWord word = skewcode::encode(m, cb);
            const skewcode::SkewPattern skew = skewcode::random_skew(gen, w, mode);
            if (skewcode::decode(skewcode::transmit(word, skew), cb) != m) ++failures;
        }
        report += std::to_string(trials) + " trials, " + std::to_string(failures) +
                  " failures\n";
    }

    const int rc = write_output(out, report);
    if (rc != kExitOk) return rc;
    return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal zero-error codes for the (1,w) skew channel"};
    app.require_subcommand(1);

    int cap_w_max = 0;
    std::string cap_format = "text";
    std::string cap_out;
    CLI::App* cap = app.add_subcommand("capacity", "Capacity table with the AAS summary");
    cap->add_option("--w-max", cap_w_max, "Largest block length in the table")
        ->required()
        ->check(CLI::Range(1, 1000000));
    cap->add_option("--format", cap_format, "Output format: csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    cap->add_option("--out", cap_out, "Write to this path instead of stdout");

    int cbk_w = 0;
    std::string cbk_format = "json";
    std::string cbk_out;
    CLI::App* cbk = app.add_subcommand("codebook", "Emit the codebook for one block length");
    cbk->add_option("--w", cbk_w, "Block length")->required()->check(CLI::Range(1, 30));
    cbk->add_option("--format", cbk_format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cbk->add_option("--out", cbk_out, "Write to this path instead of stdout");

    int grp_w = 0;
    int grp_h = -1;
    std::string grp_out;
    CLI::App* grp = app.add_subcommand("graph", "Export confusability components as edge lists");
    grp->add_option("--w", grp_w, "Block length")->required()->check(CLI::Range(1, 12));
    grp->add_option("--weight", grp_h, "Single weight class (default: all)")
        ->check(CLI::Range(0, 12));
    grp->add_option("--out", grp_out, "Write to this path instead of stdout");

    int ver_w = 0;
    std::string ver_out;
    CLI::App* ver = app.add_subcommand("verify", "Cross-check analytic results against oracles");
    ver->add_option("--w", ver_w, "Block length")->required()->check(CLI::Range(1, 8));
    ver->add_option("--out", ver_out, "Write to this path instead of stdout");

    int sim_w = 0;
    std::uint64_t sim_trials = 10;
    std::uint64_t sim_seed = 0;
    std::string sim_mode = "binary";
    std::string sim_out;
    CLI::App* sim = app.add_subcommand("simulate", "Stream random encoded blocks as JSON lines");
    sim->add_option("--w", sim_w, "Block length")->required()->check(CLI::Range(1, 90));
    sim->add_option("--trials", sim_trials, "Number of blocks")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
    sim->add_option("--seed", sim_seed, "Generator seed");
    sim->add_option("--mode", sim_mode, "Skew mode")
        ->check(CLI::IsMember({"binary", "ternary"}));
    sim->add_option("--out", sim_out, "Write to this path instead of stdout");

    int rtp_w = 0;
    std::uint64_t rtp_trials = 0;
    std::uint64_t rtp_seed = 0;
    bool rtp_exhaustive = false;
    std::string rtp_mode = "binary";
    std::string rtp_out;
    CLI::App* rtp = app.add_subcommand("roundtrip", "Encode-transmit-decode and count failures");
    rtp->add_option("--w", rtp_w, "Block length")->required()->check(CLI::Range(1, 90));
    CLI::Option* rtp_trials_opt = rtp->add_option("--trials", rtp_trials, "Random trials to run")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}));
    rtp->add_flag("--exhaustive", rtp_exhaustive,
                  "All messages x all skews x all modes (w <= 8)")
        ->excludes(rtp_trials_opt);
    rtp->add_option("--seed", rtp_seed, "Generator seed");
    rtp->add_option("--mode", rtp_mode, "Skew mode for random trials")
        ->check(CLI::IsMember({"binary", "ternary"}));
    rtp->add_option("--out", rtp_out, "Write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap->parsed()) return cmd_capacity(cap_w_max, cap_format, cap_out);
        if (cbk->parsed()) return cmd_codebook(cbk_w, cbk_format, cbk_out);
        if (grp->parsed()) return cmd_graph(grp_w, grp_h, grp_out);
        if (ver->parsed()) return cmd_verify(ver_w, ver_out);
        if (sim->parsed()) return cmd_simulate(sim_w, sim_trials, sim_seed, sim_mode, sim_out);
        if (rtp->parsed()) {
            return cmd_roundtrip(rtp_w, rtp_exhaustive, rtp_trials, rtp_seed, rtp_mode, rtp_out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
