#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slce/finite_field.hpp"

namespace slce {

/// eta: 1 on nonzero squares, -1 on non-squares, 0 at zero.
int quadratic_character(const PrimePowerField& field, const FieldElement& beta);

/// Cyclotomy setup for q - 1 = d * f with respect to a primitive alpha.
struct CyclotomicContext {
    const PrimePowerField* field;
    FieldElement alpha;
    int64_t d;
    int64_t f;

    static CyclotomicContext create(const PrimePowerField& field, int64_t d);
    static CyclotomicContext create(const PrimePowerField& field, int64_t d,
                                    const FieldElement& alpha);
};

/// Class C_i^d = {alpha^{kd+i} : 0 <= k < f}. Throws IndexOutOfRange.
std::vector<FieldElement> cyclotomic_class(const CyclotomicContext& ctx, int64_t i);

/// (l,m)_d = |(C_l^d + 1) intersect C_m^d|. Throws IndexOutOfRange.
int64_t cyclotomic_number(const CyclotomicContext& ctx, int64_t l, int64_t m);

/// I_n(a) = sum over c in F_q* of eta(c^n + a).
int64_t jacobsthal_I(const PrimePowerField& field, int64_t n, const FieldElement& a);

/// Variant summed over the whole field, i.e. with the c = 0 term eta(a) added.
int64_t jacobsthal_I_full(const PrimePowerField& field, int64_t n, const FieldElement& a);

/// H_n(a) = sum over c in F_q* of eta(c) * eta(c^n + a).
int64_t jacobsthal_H(const PrimePowerField& field, int64_t n, const FieldElement& a);

/// Per-unit table of I_d values with mod-4 residues and subgroup membership.
/// Full-range storage is kept when d <= full_range_limit; the distinguished
/// points 1 and alpha^{-t} (1 <= t <= d-1) are always available.
class JacobsthalTable {
  public:
    int64_t n() const { return n_; }
    bool full_range() const { return full_range_; }

    int64_t unit_sum(uint32_t enc) const;        // I_n(a) for a with this encoding
    int64_t full_sum(uint32_t enc) const;        // unit_sum + eta(a)
    int unit_sum_mod4(uint32_t enc) const;       // in [0,4)
    bool in_subgroup(uint32_t enc) const;        // a in <alpha^d>

    int64_t at_one() const { return at_one_; }
    const std::vector<int64_t>& at_alpha_neg_t() const { return at_neg_t_; }  // t = 1..d-1
    const std::optional<std::vector<int32_t>>& h_values() const { return h_values_; }

  private:
    friend JacobsthalTable jacobsthal_table(const CyclotomicContext&, int64_t, bool);
    const PrimePowerField* field_ = nullptr;
    int64_t n_ = 0;
    bool full_range_ = false;
    std::vector<int32_t> values_;  // indexed by encoding when full_range_
    std::optional<std::vector<int32_t>> h_values_;
    int64_t at_one_ = 0;
    std::vector<int64_t> at_neg_t_;
};

JacobsthalTable jacobsthal_table(const CyclotomicContext& ctx, int64_t full_range_limit = 64,
                                 bool with_h = false);

}  // namespace slce
