#include "skewcode/capacity.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace skewcode {

namespace {

// standard Fibonacci G_0 = 0, G_1 = 1 (F_w = G_{w+2})
std::pair<BigInt, BigInt> std_fib_pair(int w) {  // returns (G_{w-1}, G_w), w >= 1
    BigInt prev = 0, cur = 1;
    for (int i = 1; i < w; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {prev, cur};
}

const BigFloat& sqrt5() {
    static const BigFloat v = sqrt(BigFloat(5));
    return v;
}

BigFloat log2_of(const BigFloat& v) {
    static const BigFloat ln2 = log(BigFloat(2));
    return log(v) / ln2;
}

BigFloat signed_inv_phi_pow(int w) {  // (-1/phi)^w
    const BigFloat mag = pow(1 / golden_ratio(), w);
    return (w % 2 == 0) ? mag : -mag;
}

}  // namespace

BigInt fibonacci(int w) {
    if (w < 0) throw std::invalid_argument("fibonacci: w must be >= 0");
    BigInt prev = 1, cur = 2;  // F_0, F_1
    if (w == 0) return prev;
    for (int i = 1; i < w; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigFloat capacity_1w(int w) {
    if (w < 1) throw std::invalid_argument("capacity_1w: w must be >= 1");
    return log2_of(BigFloat(fibonacci(w))) / w;
}

BigFloat golden_ratio() {
    static const BigFloat v = (1 + sqrt5()) / 2;
    return v;
}

BigFloat log2_golden_ratio() {
    static const BigFloat v = log2_of(golden_ratio());
    return v;
}

BigFloat binet_alpha() {
    static const BigFloat v = (4 + 2 * sqrt5()) / (5 + sqrt5());
    return v;
}

BigFloat binet(int w) {
    if (w < 0) throw std::invalid_argument("binet: w must be >= 0");
    const BigFloat alpha = binet_alpha();
    return alpha * pow(golden_ratio(), w) + (1 - alpha) * signed_inv_phi_pow(w);
}

bool fib_dominates_phi_exact(int w) {
    if (w < 1) throw std::invalid_argument("fib_dominates_phi_exact: w must be >= 1");
    const auto [g_prev, g_cur] = std_fib_pair(w);

    // F_w >= G_w*phi + G_{w-1}  <=>  a >= G_w*phi  with a = F_w - G_{w-1}
    //                           <=>  2a - G_w >= 0  and  (2a - G_w)^2 >= 5*G_w^2
    const BigInt a = fibonacci(w) - g_prev;
    if (a < 0) return false;
    const BigInt t = 2 * a - g_cur;
    if (t < 0) return false;
    return t * t >= 5 * g_cur * g_cur;
}

bool fib_dominates_phi_floating(int w) {
    if (w < 1) throw std::invalid_argument("fib_dominates_phi_floating: w must be >= 1");
    return (binet_alpha() - 1) * (pow(golden_ratio(), w) - signed_inv_phi_pow(w)) > 0;
}

bool lower_bound_check(int w_max) {
    if (w_max < 2) throw std::invalid_argument("lower_bound_check: w_max must be >= 2");

    // rolling values: F_w, G_{w-1}, G_w starting at w = 2
    BigInt f_prev = 2, f_cur = 3;          // F_1, F_2
    BigInt g_prev = 1, g_cur = 1;          // G_1, G_2
    BigFloat phi_pow = golden_ratio() * golden_ratio();
    const BigFloat alpha_m1 = binet_alpha() - 1;

    for (int w = 2; w <= w_max; ++w) {
        const BigInt a = f_cur - g_prev;
        const BigInt t = 2 * a - g_cur;
        if (a < 0 || t < 0 || t * t < 5 * g_cur * g_cur) return false;
        if (alpha_m1 * (phi_pow - signed_inv_phi_pow(w)) <= 0) return false;

        BigInt f_next = f_prev + f_cur;
        f_prev = std::move(f_cur);
        f_cur = std::move(f_next);
        BigInt g_next = g_prev + g_cur;
        g_prev = std::move(g_cur);
        g_cur = std::move(g_next);
        phi_pow *= golden_ratio();
    }
    return true;
}

namespace {

CapacityReport make_report(int w, BigInt fib) {
    CapacityReport rep;
    rep.w = w;
    rep.fib = std::move(fib);
    rep.capacity = log2_of(BigFloat(rep.fib)) / w;
    rep.limit_gap = rep.capacity - log2_golden_ratio();
    rep.binet_residual = abs(binet(w) - BigFloat(rep.fib));
    return rep;
}

// calls fn(report) for w = 1..w_max with a rolling F_w
template <typename Fn>
void for_each_report(int w_max, Fn&& fn) {
    if (w_max < 1) throw std::invalid_argument("capacity table: w_max must be >= 1");
    BigInt prev = 1, cur = 2;  // F_0, F_1
    for (int w = 1; w <= w_max; ++w) {
        fn(make_report(w, cur));
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
}

}  // namespace

CapacityReport capacity_report(int w) {
    if (w < 1) throw std::invalid_argument("capacity_report: w must be >= 1");
    return make_report(w, fibonacci(w));
}

AASBounds aas_sandwich(int w_max) {
    if (w_max < 2) throw std::invalid_argument("aas_sandwich: w_max must be >= 2");

    AASBounds b;
    b.lower = log2_golden_ratio();
    b.resolved = b.lower;
    b.w_max = w_max;

    BigInt f_prev = 2, f_cur = 3;  // F_1, F_2
    for (int w = 2; w <= w_max; ++w) {
        const BigFloat c = log2_of(BigFloat(f_cur)) / w;
        if (w == 2 || c < b.upper) {
            b.upper = c;
            b.upper_at_w = w;
        }
        BigInt f_next = f_prev + f_cur;
        f_prev = std::move(f_cur);
        f_cur = std::move(f_next);
    }
    return b;
}

std::string format_real12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_real12(const BigFloat& v) {
    return format_real12(v.convert_to<double>());
}

std::string aas_summary(const AASBounds& b) {
    std::string s;
    s += "AAS sandwich: log2(phi) = " + format_real12(b.lower) +
         " <= C_AAS <= inf C_1,w; computed upper bound min C_1,w = " + format_real12(b.upper) +
         " (at w = " + std::to_string(b.upper_at_w) + ", range 2 <= w <= " +
         std::to_string(b.w_max) + "). ";
    s += "The infimum equals the limit, inf C_1,w = lim C_1,w = log2(phi), so "
         "C_AAS = log2(phi) = " + format_real12(b.resolved) + " exactly.";
    return s;
}

namespace {

double real12(const BigFloat& v) {
    // round to 12 significant digits so every emitter prints identically
    return std::stod(format_real12(v));
}

}  // namespace

std::string capacity_csv(int w_max) {
    std::string out = "w,F_w,C_1w,gap_to_log2phi\n";
    for_each_report(w_max, [&](const CapacityReport& rep) {
        out += std::to_string(rep.w) + "," + rep.fib.str() + "," + format_real12(rep.capacity) +
               "," + format_real12(rep.limit_gap) + "\n";
    });
    if (w_max >= 2) out += "# " + aas_summary(aas_sandwich(w_max)) + "\n";
    return out;
}

std::string capacity_text(int w_max) {
    std::string out;
    for_each_report(w_max, [&](const CapacityReport& rep) {
        out += "w=" + std::to_string(rep.w) + " F_w=" + rep.fib.str() +
               " C_1w=" + format_real12(rep.capacity) +
               " gap=" + format_real12(rep.limit_gap) + "\n";
    });
    if (w_max >= 2) out += aas_summary(aas_sandwich(w_max)) + "\n";
    return out;
}

std::string capacity_json(int w_max) {
    nlohmann::json rows = nlohmann::json::array();
    for_each_report(w_max, [&](const CapacityReport& rep) {
        rows.push_back({{"w", rep.w},
                        {"fib", rep.fib.str()},
                        {"capacity", real12(rep.capacity)},
                        {"limit_gap", real12(rep.limit_gap)},
                        {"binet_residual", real12(rep.binet_residual)}});
    });
    nlohmann::json j{{"rows", std::move(rows)}};
    if (w_max >= 2) {
        const AASBounds b = aas_sandwich(w_max);
        j["aas"] = {{"lower", real12(b.lower)},
                    {"upper", real12(b.upper)},
                    {"resolved", real12(b.resolved)},
                    {"upper_at_w", b.upper_at_w},
                    {"w_max", b.w_max},
                    {"conclusion", aas_summary(b)}};
    }
    return j.dump();
}

}  // namespace skewcode
