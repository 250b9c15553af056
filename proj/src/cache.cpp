#include "gb/cache.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "gb/report_json.hpp"

namespace gb {

using nlohmann::json;

Cache& Cache::instance() {
    static Cache c;
    static std::once_flag once;
    std::call_once(once, [] { c.open_from_env(); });
    return c;
}

void Cache::open_from_env() {
    const char* path = std::getenv("GENUSBOUND_CACHE");
    if (path != nullptr && *path != '\0') open(path);
}

void Cache::open(const std::string& path) {
    std::lock_guard<std::mutex> lock(mu_);
    path_ = path;
    factorizations_.clear();
    splittings_.clear();
    load_locked();
}

void Cache::load_locked() {
    std::ifstream in(path_);
    if (!in) return;  // nothing cached yet
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            if (j.at("tool").get<std::string>() != kToolVersion) continue;
            std::string kind = j.at("kind").get<std::string>();
            if (kind == "factorization") {
                Int n(j.at("n").get<std::string>());
                Factorization f = factorization_from_json(j.at("data"));
                if (f.value() == n) factorizations_[n] = f;
            } else if (kind == "splitting") {
                Int p(j.at("p").get<std::string>());
                std::vector<PrimeAbove> above;
                for (const json& pa : j.at("data")) above.push_back(prime_above_from_json(pa));
                splittings_[{j.at("field").get<std::string>(), p}] = above;
            }
        } catch (const std::exception&) {
            continue;  // advisory: skip corrupt lines
        }
    }
}

void Cache::append_locked(const std::string& line) {
    std::ofstream out(path_, std::ios::app);
    if (out) out << line << '\n';
}

std::optional<Factorization> Cache::lookup_factorization(const Int& n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = factorizations_.find(n);
    if (it == factorizations_.end()) return std::nullopt;
    if (it->second.value() != n) return std::nullopt;  // verify before use
    return it->second;
}

void Cache::store_factorization(const Int& n, const Factorization& f) {
    std::lock_guard<std::mutex> lock(mu_);
    if (path_.empty()) return;
    if (factorizations_.count(n)) return;
    factorizations_[n] = f;
    json j{{"tool", kToolVersion},
           {"kind", "factorization"},
           {"n", n.get_str()},
           {"data", factorization_to_json(f)}};
    append_locked(j.dump());
}

std::optional<std::vector<PrimeAbove>> Cache::lookup_splitting(const std::string& field_name,
                                                               const Int& p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = splittings_.find({field_name, p});
    if (it == splittings_.end()) return std::nullopt;
    return it->second;
}

void Cache::store_splitting(const std::string& field_name, const Int& p,
                            const std::vector<PrimeAbove>& above) {
    std::lock_guard<std::mutex> lock(mu_);
    if (path_.empty()) return;
    if (splittings_.count({field_name, p})) return;
    splittings_[{field_name, p}] = above;
    json data = json::array();
    for (const PrimeAbove& pa : above) data.push_back(prime_above_to_json(pa));
    json j{{"tool", kToolVersion},
           {"kind", "splitting"},
           {"field", field_name},
           {"p", p.get_str()},
           {"data", data}};
    append_locked(j.dump());
}

std::size_t Cache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return factorizations_.size() + splittings_.size();
}

}  // namespace gb
