#ifndef GB_CACHE_HPP
#define GB_CACHE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gb/arith.hpp"
#include "gb/numfield.hpp"

namespace gb {

/// Append-only advisory cache: a JSON-lines file mapping integers to
/// factorizations and (field, prime) pairs to splitting data, keyed by the
/// tool version. Lookups only ever accelerate; corrupt or stale lines are
/// skipped on load, and every hit is re-verified before use.
class Cache {
  public:
    /// Opens the file named by the GENUSBOUND_CACHE environment variable;
    /// a missing variable leaves the cache disabled (all lookups miss).
    static Cache& instance();

    void open(const std::string& path);
    void open_from_env();
    bool enabled() const { return !path_.empty(); }

    std::optional<Factorization> lookup_factorization(const Int& n) const;
    void store_factorization(const Int& n, const Factorization& f);

    std::optional<std::vector<PrimeAbove>> lookup_splitting(const std::string& field_name,
                                                            const Int& p) const;
    void store_splitting(const std::string& field_name, const Int& p,
                         const std::vector<PrimeAbove>& above);

    std::size_t size() const;

  private:
    mutable std::mutex mu_;
    std::string path_;
    std::map<Int, Factorization> factorizations_;
    std::map<std::pair<std::string, Int>, std::vector<PrimeAbove>> splittings_;

    void load_locked();
    void append_locked(const std::string& line);
};

}  // namespace gb

#endif
