#include "gb/cohom.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gb {

FiniteModule::FiniteModule(long n_, int d_) : n(n_), d(d_) {
    if (n < 1 || d < 0) throw std::invalid_argument("FiniteModule: bad parameters");
    double sz = 1;
    for (int i = 0; i < d; ++i) sz *= static_cast<double>(n);
    if (sz > 1e12) throw std::invalid_argument("FiniteModule: module too large");
}

std::uint64_t FiniteModule::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < d; ++i) s *= static_cast<std::uint64_t>(n);
    return s;
}

std::vector<long> FiniteModule::decode(std::uint64_t idx) const {
    std::vector<long> v(d);
    for (int i = 0; i < d; ++i) {
        v[i] = static_cast<long>(idx % n);
        idx /= n;
    }
    return v;
}

std::uint64_t FiniteModule::encode(const std::vector<long>& v) const {
    std::uint64_t idx = 0;
    for (int i = d - 1; i >= 0; --i) {
        long x = ((v[i] % n) + n) % n;
        idx = idx * n + static_cast<std::uint64_t>(x);
    }
    return idx;
}

std::uint64_t FiniteModule::add(std::uint64_t a, std::uint64_t b) const {
    std::vector<long> va = decode(a), vb = decode(b);
    for (int i = 0; i < d; ++i) va[i] = (va[i] + vb[i]) % n;
    return encode(va);
}

std::uint64_t FiniteModule::neg(std::uint64_t a) const {
    std::vector<long> v = decode(a);
    for (auto& x : v) x = (n - x) % n;
    return encode(v);
}

ModMatrix ModMatrix::identity(long n, int d) {
    ModMatrix I{n, d, std::vector<long>(static_cast<std::size_t>(d) * d, 0)};
    for (int i = 0; i < d; ++i) I.at(i, i) = 1 % n;
    return I;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("ModMatrix: mismatch");
    ModMatrix r{n, d, std::vector<long>(static_cast<std::size_t>(d) * d, 0)};
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            long aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < d; ++j) r.at(i, j) = (r.at(i, j) + aik * o.at(k, j)) % n;
        }
    return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
    ModMatrix r = *this;
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] = (m[i] + o.m[i]) % n;
    return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
    ModMatrix r = *this;
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] = ((m[i] - o.m[i]) % n + n) % n;
    return r;
}

std::uint64_t ModMatrix::apply(const FiniteModule& M, std::uint64_t x) const {
    if (M.n != n || M.d != d) throw std::invalid_argument("ModMatrix: module exponent mismatch");
    std::vector<long> v = M.decode(x), r(d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r[i] = (r[i] + at(i, j) * v[j]) % n;
    return M.encode(r);
}

namespace {
// determinant mod n by cofactor expansion (d is tiny here)
long det_mod(const ModMatrix& a) {
    int d = a.d;
    if (d == 0) return 1 % a.n;
    if (d == 1) return a.at(0, 0);
    long det = 0;
    int sign = 1;
    for (int j = 0; j < d; ++j) {
        ModMatrix minor{a.n, d - 1, std::vector<long>(static_cast<std::size_t>(d - 1) * (d - 1))};
        for (int i = 1; i < d; ++i) {
            int cc = 0;
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                minor.at(i - 1, cc++) = a.at(i, k);
            }
        }
        long term = (a.at(0, j) * det_mod(minor)) % a.n;
        det = ((det + sign * term) % a.n + a.n) % a.n;
        sign = -sign;
    }
    return det;
}
}  // namespace

bool ModMatrix::invertible() const {
    long dm = det_mod(*this);
    return std::gcd(dm, n) == 1;
}

MatrixGroup MatrixGroup::generate(std::vector<ModMatrix> gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("MatrixGroup: no generators");
    long n = gens[0].n;
    int d = gens[0].d;
    for (const auto& g : gens) {
        if (g.n != n || g.d != d) throw std::invalid_argument("MatrixGroup: generator mismatch");
        if (!g.invertible()) throw std::invalid_argument("MatrixGroup: generator not invertible");
    }
    MatrixGroup G{n, d, gens, {}};
    std::set<ModMatrix> seen;
    std::vector<ModMatrix> queue = {ModMatrix::identity(n, d)};
    seen.insert(queue[0]);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& g : gens) {
            ModMatrix next = queue[i] * g;
            if (seen.insert(next).second) {
                queue.push_back(next);
                if (queue.size() > cap) throw std::length_error("MatrixGroup: closure cap exceeded");
            }
        }
    }
    G.elements = std::move(queue);
    return G;
}

std::vector<std::uint64_t> h0(const MatrixGroup& G, const FiniteModule& M) {
    std::vector<std::uint64_t> fixed;
    for (std::uint64_t m = 0; m < M.size(); ++m) {
        bool ok = true;
        for (const auto& g : G.generators)
            if (g.apply(M, m) != m) {
                ok = false;
                break;
            }
        if (ok) fixed.push_back(m);
    }
    return fixed;
}

CocycleSet h1(const MatrixGroup& G, const FiniteModule& M) {
    if (G.n != M.n) throw std::invalid_argument("h1: module exponent mismatch");
    const std::size_t s = G.generators.size();
    const std::uint64_t msz = M.size();

    // index of each element and its BFS parent (parent index, generator)
    std::map<ModMatrix, std::size_t> index;
    for (std::size_t i = 0; i < G.elements.size(); ++i) index[G.elements[i]] = i;

    std::uint64_t z1 = 0;
    // enumerate c(g_1), ..., c(g_s) in M^s
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (total > (1ull << 40) / msz) throw std::length_error("h1: assignment space too large");
        total *= msz;
    }
    std::vector<std::uint64_t> value(G.elements.size());
    std::vector<char> known(G.elements.size());
    for (std::uint64_t assign = 0; assign < total; ++assign) {
        std::vector<std::uint64_t> gen_val(s);
        std::uint64_t a = assign;
        for (std::size_t i = 0; i < s; ++i) {
            gen_val[i] = a % msz;
            a /= msz;
        }
        std::fill(known.begin(), known.end(), 0);
        value[0] = 0;  // c(e) = 0
        known[0] = 1;
        bool consistent = true;
        // BFS order: elements vector is already in BFS order from generate()
        for (std::size_t i = 0; i < G.elements.size() && consistent; ++i) {
            if (!known[i]) throw std::logic_error("h1: closure order broken");
            for (std::size_t j = 0; j < s && consistent; ++j) {
                ModMatrix prod = G.elements[i] * G.generators[j];
                std::size_t k = index.at(prod);
                std::uint64_t v = M.add(value[i], G.elements[i].apply(M, gen_val[j]));
                if (known[k]) {
                    if (value[k] != v) consistent = false;
                } else {
                    value[k] = v;
                    known[k] = 1;
                }
            }
        }
        if (consistent) ++z1;
    }

    // coboundaries g -> (g-1)m, distinguished by their generator restriction
    std::set<std::vector<std::uint64_t>> cob;
    for (std::uint64_t m = 0; m < msz; ++m) {
        std::vector<std::uint64_t> v(s);
        for (std::size_t j = 0; j < s; ++j)
            v[j] = M.add(G.generators[j].apply(M, m), M.neg(m));
        cob.insert(v);
    }
    std::uint64_t b1 = cob.size();
    if (z1 % b1 != 0) throw std::logic_error("h1: |B1| does not divide |Z1|");
    return {z1, b1, z1 / b1};
}

std::uint64_t cyclic_h1(const ModMatrix& u, const FiniteModule& M) {
    if (!u.invertible()) throw std::invalid_argument("cyclic_h1: matrix not invertible");
    ModMatrix I = ModMatrix::identity(u.n, u.d);
    // order of u
    ModMatrix pw = u;
    long ord = 1;
    while (!(pw == I)) {
        pw = pw * u;
        if (++ord > 1000000) throw std::length_error("cyclic_h1: order too large");
    }
    // N = 1 + u + ... + u^{ord-1}
    ModMatrix N = I, cur = I;
    for (long i = 1; i < ord; ++i) {
        cur = cur * u;
        N = N + cur;
    }
    ModMatrix um1 = u - I;
    std::uint64_t ker = 0;
    std::set<std::uint64_t> image;
    std::uint64_t zero = 0;
    for (std::uint64_t m = 0; m < M.size(); ++m) {
        if (N.apply(M, m) == zero) ++ker;
        image.insert(um1.apply(M, m));
    }
    if (ker % image.size() != 0) throw std::logic_error("cyclic_h1: non-integral quotient");
    return ker / image.size();
}

// ------------------------------------------------- abelian index checker

namespace {

struct AbGroup {
    std::vector<long> orders;
    std::uint64_t size() const {
        std::uint64_t s = 1;
        for (long o : orders) s *= static_cast<std::uint64_t>(o);
        return s;
    }
    std::vector<long> decode(std::uint64_t idx) const {
        std::vector<long> v(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            v[i] = static_cast<long>(idx % orders[i]);
            idx /= orders[i];
        }
        return v;
    }
    std::uint64_t encode(std::vector<long> v) const {
        std::uint64_t idx = 0;
        for (std::size_t i = orders.size(); i-- > 0;) {
            long x = ((v[i] % orders[i]) + orders[i]) % orders[i];
            idx = idx * orders[i] + static_cast<std::uint64_t>(x);
        }
        return idx;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        auto va = decode(a), vb = decode(b);
        for (std::size_t i = 0; i < orders.size(); ++i) va[i] = (va[i] + vb[i]) % orders[i];
        return encode(va);
    }
    std::uint64_t scale(long k, std::uint64_t a) const {
        auto v = decode(a);
        for (std::size_t i = 0; i < orders.size(); ++i)
            v[i] = static_cast<long>((static_cast<long long>(k % orders[i] + orders[i]) * v[i]) %
                                     orders[i]);
        return encode(v);
    }
};

}  // namespace

IndexCheck torsion_quotient_index_check(const std::vector<long>& cyclic_orders,
                                        const std::vector<std::vector<long>>& b_generators,
                                        long n) {
    AbGroup A{cyclic_orders};
    if (A.size() > 1000000) throw std::invalid_argument("index check: group too large");
    // subgroup B
    std::set<std::uint64_t> B = {0};
    for (const auto& gen : b_generators) {
        if (gen.size() != cyclic_orders.size())
            throw std::invalid_argument("index check: generator arity mismatch");
        std::uint64_t g = A.encode(gen);
        std::set<std::uint64_t> next = B;
        std::uint64_t cur = 0;
        do {
            cur = A.add(cur, g);
            for (std::uint64_t b : B) next.insert(A.add(b, cur));
        } while (cur != 0);
        B = std::move(next);
    }
    // coset representative map
    std::map<std::uint64_t, std::uint64_t> coset;  // element -> canonical rep
    for (std::uint64_t a = 0; a < A.size(); ++a) {
        if (coset.count(a)) continue;
        for (std::uint64_t b : B) coset[A.add(a, b)] = a;
    }
    // n-torsion of A, its image in A/B, and n-torsion of A/B
    std::set<std::uint64_t> image_nA;
    for (std::uint64_t a = 0; a < A.size(); ++a)
        if (A.scale(n, a) == 0) image_nA.insert(coset.at(a));
    std::set<std::uint64_t> nQuot;
    for (std::uint64_t a = 0; a < A.size(); ++a)
        if (coset.at(A.scale(n, a)) == coset.at(0)) nQuot.insert(coset.at(a));
    if (nQuot.size() % image_nA.size() != 0)
        throw std::logic_error("index check: image does not divide torsion of quotient");
    std::uint64_t index = nQuot.size() / image_nA.size();
    std::uint64_t bord = B.size();
    return {index, bord, bord % index == 0};
}

}  // namespace gb
