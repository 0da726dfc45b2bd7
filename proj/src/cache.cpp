#include "jl/cache.hpp"

#include <fstream>

#include "jl/johnson.hpp"
#include "jl/serialize.hpp"

namespace jl {

BasisCache::BasisCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {
    std::filesystem::create_directories(dir_);
}

std::string BasisCache::derbasis_key(const Alphabet& a, int m, DerKind kind) {
    std::string model = a.is_symplectic() ? "sym-g" + std::to_string(a.genus())
                                          : "bnd-p" + std::to_string(a.punctures());
    return "derbasis-" + model + "-m" + std::to_string(m) + (kind == DerKind::Lie ? "-lie" : "-tensor");
}

std::string BasisCache::johnson_key(const Alphabet& a, int m) {
    return "johnson-sym-g" + std::to_string(a.genus()) + "-m" + std::to_string(m);
}

std::optional<Subspace> BasisCache::load(const std::string& key, const Alphabet& a, int degree,
                                         DerKind kind) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(dir_ / (key + ".json"));
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
        if (j.value("format", std::string{}) != format_version) return std::nullopt;
        Subspace s(a, degree, kind);
        for (auto& e : j.at("basis")) s.add(derivation_from_json(e));
        return s;
    } catch (const std::exception&) {
        return std::nullopt;  // stale or corrupt entry: recompute
    }
}

void BasisCache::store(const std::string& key, const Subspace& s) const {
    if (!enabled_) return;
    Json j;
    j["format"] = format_version;
    Json arr = Json::array();
    for (auto& d : s.basis()) arr.push_back(derivation_to_json(d));
    j["basis"] = std::move(arr);
    auto tmp = dir_ / (key + ".tmp");
    auto final = dir_ / (key + ".json");
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::filesystem::rename(tmp, final);
}

Subspace theta_der_basis_cached(const BasisCache& cache, const Alphabet& a, int m, DerKind kind, int jobs) {
    std::string key = BasisCache::derbasis_key(a, m, kind);
    if (auto s = cache.load(key, a, m, kind)) return std::move(*s);
    Subspace s = theta_der_basis(a, m, kind, jobs);
    cache.store(key, s);
    return s;
}

Subspace johnson_image_cached(const BasisCache& cache, const Alphabet& a, int m) {
    std::string key = BasisCache::johnson_key(a, m);
    if (auto s = cache.load(key, a, m, DerKind::Lie)) return std::move(*s);
    Subspace s = m == 1 ? johnson_degree1(a) : johnson_image_step(johnson_image_cached(cache, a, m - 1));
    cache.store(key, s);
    return s;
}

}  // namespace jl
