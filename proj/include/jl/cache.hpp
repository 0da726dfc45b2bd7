#pragma once

#include <filesystem>
#include <optional>

#include "jl/derivation.hpp"

namespace jl {

/// Persistent basis cache. Entries carry a format-version header and are
/// ignored (recomputed) on mismatch. Single writer, multiple readers:
/// files are written atomically via a temp file and rename.
class BasisCache {
public:
    static constexpr const char* format_version = "jl-cache-v1";

    BasisCache() = default;  // disabled
    explicit BasisCache(std::filesystem::path dir);

    bool enabled() const { return enabled_; }

    std::optional<Subspace> load(const std::string& key, const Alphabet& a, int degree, DerKind kind) const;
    void store(const std::string& key, const Subspace& s) const;

    static std::string derbasis_key(const Alphabet& a, int m, DerKind kind);
    static std::string johnson_key(const Alphabet& a, int m);

private:
    std::filesystem::path dir_;
    bool enabled_ = false;
};

/// theta_der_basis through the cache.
Subspace theta_der_basis_cached(const BasisCache& cache, const Alphabet& a, int m, DerKind kind,
                                int jobs = 1);
/// johnson_image through the cache (caches every intermediate weight).
Subspace johnson_image_cached(const BasisCache& cache, const Alphabet& a, int m);

}  // namespace jl
