#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace skewcode {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// F_0 = 1, F_1 = 2, F_w = F_{w-1} + F_{w-2}: the codebook sizes.
BigInt fibonacci(int w);

// log2(F_w) / w in bits per slot, evaluated from the exact integer.
BigFloat capacity_1w(int w);

BigFloat golden_ratio();
BigFloat log2_golden_ratio();
BigFloat binet_alpha();  // (4 + 2*sqrt(5)) / (5 + sqrt(5))

// Closed form alpha*phi^w + (1 - alpha)*(-1/phi)^w.
BigFloat binet(int w);

// Certifies F_w >= phi^w for one w by exact integer arithmetic alone:
// phi^w = G_w*phi + G_{w-1} with the standard Fibonacci numbers G, so the
// claim reduces to integer sign tests (squaring removes the sqrt(5)).
bool fib_dominates_phi_exact(int w);

// The same sign read off (alpha - 1)(phi^w - (-1/phi)^w) in extended
// precision; a cross-check, not a certificate.
bool fib_dominates_phi_floating(int w);

// Both routes for every 2 <= w <= w_max.
bool lower_bound_check(int w_max);

struct CapacityReport {
    int w = 0;
    BigInt fib;
    BigFloat capacity;        // C_1,w
    BigFloat limit_gap;       // C_1,w - log2(phi)
    BigFloat binet_residual;  // |binet(w) - F_w|
};

CapacityReport capacity_report(int w);

struct AASBounds {
    BigFloat lower;     // log2(phi)
    BigFloat upper;     // min of C_1,w over 2 <= w <= w_max
    BigFloat resolved;  // log2(phi)
    int upper_at_w = 0;
    int w_max = 0;
};

AASBounds aas_sandwich(int w_max);  // requires w_max >= 2

// Report emitters. CSV: header "w,F_w,C_1w,gap_to_log2phi", one row per w,
// then the sandwich summary as a trailing "#" comment. Reals print with 12
// significant digits.
std::string capacity_csv(int w_max);
std::string capacity_json(int w_max);
std::string capacity_text(int w_max);
std::string aas_summary(const AASBounds& b);

std::string format_real12(double v);
std::string format_real12(const BigFloat& v);

}  // namespace skewcode
