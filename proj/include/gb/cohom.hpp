#ifndef GB_COHOM_HPP
#define GB_COHOM_HPP

#include <cstdint>
#include <vector>

#include "gb/arith.hpp"

namespace gb {

/// (Z/n)^d with componentwise arithmetic. Elements are encoded as indices
/// in [0, n^d) with digit i = component i.
struct FiniteModule {
    long n;  // exponent
    int d;   // rank

    FiniteModule(long n_, int d_);
    std::uint64_t size() const;
    std::vector<long> decode(std::uint64_t idx) const;
    std::uint64_t encode(const std::vector<long>& v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
};

/// d x d matrix over Z/n, row-major.
struct ModMatrix {
    long n;
    int d;
    std::vector<long> m;  // d*d entries in [0, n)

    static ModMatrix identity(long n, int d);
    long& at(int i, int j) { return m[i * d + j]; }
    long at(int i, int j) const { return m[i * d + j]; }
    ModMatrix operator*(const ModMatrix&) const;
    ModMatrix operator+(const ModMatrix&) const;
    ModMatrix operator-(const ModMatrix&) const;
    std::uint64_t apply(const FiniteModule& M, std::uint64_t x) const;
    bool invertible() const;  // det a unit mod n
    bool operator==(const ModMatrix&) const = default;
    bool operator<(const ModMatrix& o) const { return m < o.m; }
};

/// Finite matrix group generated by invertible matrices over Z/n.
/// Closure is breadth-first, capped.
struct MatrixGroup {
    long n;
    int d;
    std::vector<ModMatrix> generators;
    std::vector<ModMatrix> elements;  // closure, identity first

    static MatrixGroup generate(std::vector<ModMatrix> gens, std::size_t cap = 100000);
};

/// Fixed points M^G.
std::vector<std::uint64_t> h0(const MatrixGroup& G, const FiniteModule& M);

struct CocycleSet {
    std::uint64_t z1;  // |Z^1(G, M)|
    std::uint64_t b1;  // |B^1(G, M)|
    std::uint64_t h1;  // |Z^1| / |B^1|
};

/// Brute-force H^1 by enumerating generator assignments and extending
/// along the closure by c(gh) = c(g) + g.c(h).
CocycleSet h1(const MatrixGroup& G, const FiniteModule& M);

/// |Ker N| / |(u-1)M| with N = 1 + u + ... + u^{ord(u)-1}; the cyclic-group
/// formula, used as an independent oracle for h1.
std::uint64_t cyclic_h1(const ModMatrix& u, const FiniteModule& M);

/// Index check for the quotient of n-torsion: A a product of cyclic groups,
/// B a subgroup given by generators. Returns the index
/// [ n-torsion(A/B) : image of n-torsion(A) ] and whether it divides |B|.
struct IndexCheck {
    std::uint64_t index;
    std::uint64_t b_order;
    bool divides_b;
};

IndexCheck torsion_quotient_index_check(const std::vector<long>& cyclic_orders,
                                        const std::vector<std::vector<long>>& b_generators,
                                        long n);

}  // namespace gb

#endif
