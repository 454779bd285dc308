#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resgaps/fiber.hpp"
#include "resgaps/lattice.hpp"
#include "resgaps/matrix.hpp"
#include "resgaps/rational.hpp"

namespace resgaps {

/// Finite abelian group as a list of cyclic orders; empty means trivial.
struct Torsion {
    std::vector<int> cyclic;

    /// "trivial", "Z/2", "Z/4", "(Z/2)^2", "Z/2+Z/2". Throws ParseError.
    static Torsion parse(std::string_view text);
    std::string str() const;

    bool trivial() const { return cyclic.empty(); }
    Integer order() const;

    friend bool operator==(const Torsion&, const Torsion&) = default;
};

/// Section data the lattice alone cannot provide: the section
/// sum(coords_i P_i) (+ Q for a nontrivial torsion Q when add_torsion) meets
/// component components[v] of the v-th summand of T, in canonical T order.
struct WitnessOverride {
    std::int64_t k = 0;
    std::vector<std::int64_t> coords;
    bool add_torsion = false;
    std::vector<int> components;

    /// "k=1; coords=4; torsion=1; components=2,1,1,1". Throws ParseError.
    static WitnessOverride parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const WitnessOverride&, const WitnessOverride&) = default;
};

/// One classification row.
class SurfaceCase {
public:
    int id = 0;
    std::vector<AdeLabel> t;
    std::optional<FiberConfig> fibers;
    LatticeSpec mw_free;
    Torsion torsion;
    std::optional<Rational> mu;  // absent for rank 0
    std::optional<Rational> stored_c_max;
    std::optional<Rational> stored_c_min;
    std::optional<Rational> stored_delta;
    std::map<std::string, std::string> provenance;  // "" is the row default
    std::vector<WitnessOverride> overrides;

    /// Checks every invariant and caches derived data. Throws ValidationError.
    void finalize();
    bool finalized() const { return derived_ != nullptr; }

    int rank() const;
    const SymMatrix& free_gram() const;
    /// Throws Error(RankZero).
    const SymMatrix& narrow_gram() const;
    /// det of the narrow lattice; 1 for rank 0.
    const Rational& narrow_det() const;
    const Bounds& bounds() const;
    const Enumerator& free_enumerator() const;
    const Enumerator& narrow_enumerator() const;

    friend bool operator==(const SurfaceCase& a, const SurfaceCase& b);

private:
    struct Derived;
    const Derived& derived() const;
    std::shared_ptr<const Derived> derived_;
};

/// det of the root lattice with this label.
Integer root_det(const AdeLabel& t);

inline constexpr std::string_view kCatalogEnvVar = "RESGAPS_CATALOG";

class Catalog {
public:
    int format_version = 1;
    std::string source;

    /// Throws ParseError (with line) or ValidationError (with id); nothing is
    /// returned on failure.
    static Catalog parse(std::string_view text);
    static Catalog load_file(const std::string& path);
    /// The catalog compiled into the library.
    static Catalog embedded();
    /// Explicit path, else $RESGAPS_CATALOG, else the embedded catalog.
    static Catalog load_default(const std::optional<std::string>& path = std::nullopt);

    std::string save() const;

    /// Validates and inserts. Throws ValidationError on duplicate ids.
    void add(SurfaceCase c);

    /// Throws Error(NotFound).
    const SurfaceCase& lookup(int id) const;
    /// Cases whose T multiset equals that of the fiber list. Throws
    /// Error(NotFound) when nothing matches.
    std::vector<const SurfaceCase*> lookup_fibers(std::string_view fibers) const;
    std::vector<const SurfaceCase*> lookup_t(const std::vector<AdeLabel>& t) const;

    const std::map<int, SurfaceCase>& cases() const { return cases_; }

    friend bool operator==(const Catalog&, const Catalog&) = default;

private:
    std::map<int, SurfaceCase> cases_;
};

std::string_view embedded_catalog_text();

}  // namespace resgaps
