#pragma once

#include <cstdint>
#include <vector>

#include "reisner/errors.hpp"

namespace reisner {

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Reduce a signed integer into [0, p).
    std::uint32_t from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

private:
    std::uint32_t p_;
};

/// Sparse integer matrix in triplet form; used for boundary matrices whose
/// entries are +-1 but the rank code accepts any small integers.
struct IntTriplets {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        int value;
    };
    std::vector<Entry> entries;
};

struct RankOptions {
    /// Matrices whose larger side exceeds this use sparse column reduction
    /// instead of dense elimination.
    int sparse_threshold = 4096;
};

/// Rank over Z/p.  Dispatches to a packed kernel for p = 2 and p = 3, dense
/// elimination otherwise, and sparse column reduction for large matrices.
int rank_mod_p(const IntTriplets& m, const PrimeField& field,
               const RankOptions& opt = {});

// Individual kernels, exposed for tests and benchmarks.
int rank_gf2_packed(const IntTriplets& m);
int rank_gf3_packed(const IntTriplets& m);
int rank_dense(const IntTriplets& m, const PrimeField& field);
int rank_sparse(const IntTriplets& m, const PrimeField& field);

} // namespace reisner
