#pragma once

// Quaternion-valued polynomial in a fixed number of commuting real
// variables, stored as exponent-vector -> coefficient. Variables commute
// with everything; coefficients multiply in operand order, so products of
// maps agree with pointwise quaternion products.
//
// This is the exact backend: differentiation, Laplacians and the
// coefficient-level identity checks all run on these maps.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "almansi/quaternion.hpp"

namespace almansi {

class PolyMap {
public:
    using Exponents = std::vector<std::uint8_t>;

    PolyMap() = default;
    explicit PolyMap(int nvars) : nvars_(nvars) {}

    static PolyMap constant(int nvars, const Quaternion& c);
    static PolyMap variable(int nvars, int var);  // 0-based variable index

    int nvars() const { return nvars_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Exponents, Quaternion>& terms() const { return terms_; }

    // accumulate; exact-zero coefficients are dropped
    void add_term(const Exponents& e, const Quaternion& c);

    PolyMap operator+(const PolyMap& o) const;
    PolyMap operator-(const PolyMap& o) const;
    PolyMap operator-() const { return scaled(-1.0); }

    PolyMap scaled(double s) const;
    PolyMap left_mul(const Quaternion& q) const;   // q * coeff
    PolyMap right_mul(const Quaternion& q) const;  // coeff * q

    // pointwise product; coefficients multiply as (this)*(o)
    PolyMap operator*(const PolyMap& o) const;

    PolyMap derivative(int var) const;

    // exact division by one variable; every term must contain it
    PolyMap divide_by_var(int var) const;

    // substitute var^2 -> replacement (a polynomial); requires every
    // occurrence of var to have even exponent
    PolyMap substitute_square(int var, const PolyMap& replacement) const;

    Quaternion eval(std::span<const double> coords) const;

    double max_abs_coeff() const;
    int total_degree() const;

    // max |coefficient| of the i/j/k parts
    double max_imag_coeff() const;

private:
    int nvars_{0};
    std::map<Exponents, Quaternion> terms_;

    void check_compatible(const PolyMap& o) const;
};

}  // namespace almansi
