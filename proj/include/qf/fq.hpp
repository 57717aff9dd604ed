#pragma once

#include <cstdint>
#include <vector>

namespace qf::oracle {

/// Table-driven arithmetic for F_{p^d}, p an odd prime, p^d small (oracle
/// scale). Elements are encoded 0..q-1 as base-p digit strings of the
/// coefficients of the residue polynomial; the modulus is the
/// lexicographically least monic irreducible of degree d, so the encoding is
/// canonical.
class Fq {
public:
    using El = uint16_t;

    Fq(long p, int d, long field_size_cap = 2401);

    long p() const { return p_; }
    int d() const { return d_; }
    long q() const { return q_; }

    El add(El a, El b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
    El sub(El a, El b) const { return add(a, neg(b)); }
    El mul(El a, El b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
    El neg(El a) const { return neg_[a]; }
    El inv(El a) const;

    /// Embeds an integer residue as a constant.
    El from_int(long a) const;

    bool is_square(El a) const { return sq_[a]; }

    const std::vector<El>& modulus() const { return modpoly_; }

private:
    long p_;
    int d_;
    long q_;
    std::vector<El> add_, mul_, neg_, inv_;
    std::vector<uint8_t> sq_;
    std::vector<El> modpoly_;  // monic, length d+1, coefficients in F_p
};

}  // namespace qf::oracle
