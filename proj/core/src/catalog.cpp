#include "resgaps/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "resgaps/error.hpp"

namespace resgaps {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(0, "bad " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view what) {
    std::vector<T> out;
    while (true) {
        const std::size_t comma = text.find(',');
        out.push_back(parse_number<T>(text.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

const std::set<std::string>& provenance_tags() {
    static const std::set<std::string> tags{"table", "proof", "os-classification", "derived", "user"};
    return tags;
}

const std::set<std::string>& provenance_fields() {
    static const std::set<std::string> fields{"", "T", "fibers", "EK", "torsion", "mu", "bounds", "witness"};
    return fields;
}

}  // namespace

Torsion Torsion::parse(std::string_view text) {
    text = trim(text);
    Torsion t;
    if (text == "trivial" || text == "0" || text == "1") return t;
    while (true) {
        const std::size_t plus = text.find('+');
        std::string_view part = trim(text.substr(0, plus));
        int power = 1;
        if (!part.empty() && part.front() == '(') {
            const std::size_t close = part.find(')');
            if (close == std::string_view::npos || close + 1 >= part.size() || part[close + 1] != '^') {
                throw ParseError(0, "bad torsion term '" + std::string(part) + "'");
            }
            power = parse_number<int>(part.substr(close + 2), "torsion power");
            part = part.substr(1, close - 1);
        }
        if (part.substr(0, 2) != "Z/") throw ParseError(0, "bad torsion term '" + std::string(part) + "'");
        const int n = parse_number<int>(part.substr(2), "torsion order");
        if (n < 2 || power < 1) throw ParseError(0, "bad torsion term '" + std::string(part) + "'");
        t.cyclic.insert(t.cyclic.end(), static_cast<std::size_t>(power), n);
        if (plus == std::string_view::npos) break;
        text = text.substr(plus + 1);
    }
    std::sort(t.cyclic.begin(), t.cyclic.end());
    return t;
}

std::string Torsion::str() const {
    if (cyclic.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < cyclic.size();) {
        std::size_t j = i + 1;
        while (j < cyclic.size() && cyclic[j] == cyclic[i]) ++j;
        if (!out.empty()) out += "+";
        const std::string z = "Z/" + std::to_string(cyclic[i]);
        out += j - i > 1 ? "(" + z + ")^" + std::to_string(j - i) : z;
        i = j;
    }
    return out;
}

Integer Torsion::order() const {
    Integer n = 1;
    for (int c : cyclic) n *= c;
    return n;
}

WitnessOverride WitnessOverride::parse(std::string_view text) {
    WitnessOverride w;
    bool have_k = false;
    bool have_coords = false;
    bool have_components = false;
    while (!trim(text).empty()) {
        const std::size_t semi = text.find(';');
        const std::string_view item = trim(text.substr(0, semi));
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError(0, "witness item without '=': '" + std::string(item) + "'");
        const std::string_view key = trim(item.substr(0, eq));
        const std::string_view value = trim(item.substr(eq + 1));
        if (key == "k") {
            w.k = parse_number<std::int64_t>(value, "witness k");
            have_k = true;
        } else if (key == "coords") {
            w.coords = parse_list<std::int64_t>(value, "witness coordinate");
            have_coords = true;
        } else if (key == "torsion") {
            const int flag = parse_number<int>(value, "witness torsion flag");
            if (flag != 0 && flag != 1) throw ParseError(0, "witness torsion flag must be 0 or 1");
            w.add_torsion = flag == 1;
        } else if (key == "components") {
            w.components = parse_list<int>(value, "component index");
            have_components = true;
        } else {
            throw ParseError(0, "unknown witness key '" + std::string(key) + "'");
        }
        if (semi == std::string_view::npos) break;
        text = text.substr(semi + 1);
    }
    if (!have_k || !have_coords || !have_components) throw ParseError(0, "witness needs k, coords and components");
    return w;
}

std::string WitnessOverride::str() const {
    return "k=" + std::to_string(k) + "; coords=" + join(coords) + "; torsion=" + (add_torsion ? "1" : "0") +
           "; components=" + join(components);
}

Integer root_det(const AdeLabel& t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'D': return 4;
        default: return 9 - t.rank;
    }
}

struct SurfaceCase::Derived {
    int rank = 0;
    SymMatrix free_gram;
    SymMatrix narrow_gram;
    Rational narrow_det = 1;
    Bounds bounds;
    std::unique_ptr<Enumerator> free_enum;
    std::unique_ptr<Enumerator> narrow_enum;
};

void SurfaceCase::finalize() {
    auto fail = [&](const std::string& reason) { throw ValidationError(id, reason); };
    auto d = std::make_shared<Derived>();

    if (fibers) {
        if (fibers->t_lattices() != t) {
            fail("fiber list " + fibers->str() + " gives T = " + t_string(fibers->t_lattices()) + ", not " +
                 t_string(t));
        }
    }
    if (!std::is_sorted(t.begin(), t.end(), canonical_less)) std::stable_sort(t.begin(), t.end(), canonical_less);

    try {
        d->free_gram = realize(mw_free);
    } catch (const Error& e) {
        fail(std::string("free part: ") + e.what());
    }
    d->rank = static_cast<int>(d->free_gram.dim());
    int rank_t = 0;
    Integer det_t = 1;
    for (const auto& label : t) {
        rank_t += label.rank;
        det_t *= root_det(label);
    }
    if (d->rank + rank_t != 8) {
        fail("rank " + std::to_string(d->rank) + " plus rank of T " + std::to_string(rank_t) + " is not 8");
    }
    const Integer tor = torsion.order();

    if (d->rank > 0) {
        d->narrow_gram = inverse(d->free_gram);
        if (!d->narrow_gram.is_even()) fail("narrow lattice is not even integral: " + d->narrow_gram.str());
        d->narrow_det = det(d->narrow_gram);
        if (Rational(det_t) != d->narrow_det * Rational(tor * tor)) {
            fail("det T = " + det_t.get_str() + " but det of narrow lattice times |torsion|^2 is " +
                 (d->narrow_det * Rational(tor * tor)).str());
        }
        d->free_enum = std::make_unique<Enumerator>(d->free_gram);
        d->narrow_enum = std::make_unique<Enumerator>(d->narrow_gram);
        std::optional<Rational> least;
        d->free_enum->visit(Rational(0), d->free_gram.max_diagonal(),
                            [&](std::span<const std::int64_t>, const Rational& norm) {
                                if (!least || norm < *least) least = norm;
                                return true;
                            });
        if (!mu) fail("missing mu");
        if (!least || *least != *mu) {
            fail("stored mu " + mu->str() + " but the minimal norm is " + (least ? least->str() : "undefined"));
        }
    } else {
        if (mu) fail("mu given for a rank-0 case");
        if (det_t != tor * tor) fail("det T = " + det_t.get_str() + " is not |torsion|^2");
    }

    d->bounds = resgaps::bounds(t);
    if (stored_c_max && *stored_c_max != d->bounds.c_max) {
        fail("stored c_max " + stored_c_max->str() + " but T gives " + d->bounds.c_max.str());
    }
    if (stored_c_min && *stored_c_min != d->bounds.c_min) {
        fail("stored c_min " + stored_c_min->str() + " but T gives " + d->bounds.c_min.str());
    }
    if (stored_delta && *stored_delta != d->bounds.delta) {
        fail("stored delta " + stored_delta->str() + " but T gives " + d->bounds.delta.str());
    }

    for (const auto& w : overrides) {
        if (static_cast<int>(w.coords.size()) != d->rank) fail("witness coordinates do not match the rank");
        if (w.components.size() != t.size()) fail("witness needs one component per summand of T");
        if (w.add_torsion && torsion.trivial()) fail("witness adds torsion but the torsion group is trivial");
        std::vector<Rational> contributions;
        try {
            for (std::size_t v = 0; v < t.size(); ++v) contributions.push_back(contr_single(t[v], w.components[v]));
        } catch (const Error& e) {
            fail(std::string("witness: ") + e.what());
        }
        const Rational h = d->rank > 0 ? norm(d->free_gram, w.coords) : Rational(0);
        if (height(w.k, contributions) != h) {
            fail("witness height " + h.str() + " does not equal 2+2k minus its contributions for k=" +
                 std::to_string(w.k));
        }
    }

    for (const auto& [field, tag] : provenance) {
        if (!provenance_fields().count(field)) fail("unknown provenance field '" + field + "'");
        if (!provenance_tags().count(tag)) fail("unknown provenance tag '" + tag + "'");
    }

    derived_ = std::move(d);
}

const SurfaceCase::Derived& SurfaceCase::derived() const {
    if (!derived_) throw Error(ErrorCode::ValidationError, "case " + std::to_string(id) + " is not finalized");
    return *derived_;
}

int SurfaceCase::rank() const { return derived().rank; }
const SymMatrix& SurfaceCase::free_gram() const { return derived().free_gram; }

const SymMatrix& SurfaceCase::narrow_gram() const {
    if (derived().rank == 0) throw Error(ErrorCode::RankZero, "case " + std::to_string(id) + " has rank 0");
    return derived().narrow_gram;
}

const Rational& SurfaceCase::narrow_det() const { return derived().narrow_det; }
const Bounds& SurfaceCase::bounds() const { return derived().bounds; }

const Enumerator& SurfaceCase::free_enumerator() const {
    if (derived().rank == 0) throw Error(ErrorCode::RankZero, "case " + std::to_string(id) + " has rank 0");
    return *derived().free_enum;
}

const Enumerator& SurfaceCase::narrow_enumerator() const {
    if (derived().rank == 0) throw Error(ErrorCode::RankZero, "case " + std::to_string(id) + " has rank 0");
    return *derived().narrow_enum;
}

bool operator==(const SurfaceCase& a, const SurfaceCase& b) {
    const auto fibers_str = [](const SurfaceCase& c) { return c.fibers ? c.fibers->str() : std::string(); };
    return a.id == b.id && a.t == b.t && fibers_str(a) == fibers_str(b) && a.mw_free == b.mw_free &&
           a.torsion == b.torsion && a.mu == b.mu && a.stored_c_max == b.stored_c_max &&
           a.stored_c_min == b.stored_c_min && a.stored_delta == b.stored_delta && a.provenance == b.provenance &&
           a.overrides == b.overrides;
}

Catalog Catalog::parse(std::string_view text) {
    Catalog catalog;
    std::optional<SurfaceCase> current;
    std::set<std::string> seen;
    std::size_t case_line = 0;
    bool have_format = false;

    auto flush = [&] {
        if (!current) return;
        if (seen.count("T") == 0) throw ParseError(case_line, "case " + std::to_string(current->id) + " has no T");
        if (seen.count("EK") == 0) throw ParseError(case_line, "case " + std::to_string(current->id) + " has no EK");
        catalog.add(std::move(*current));
        current.reset();
    };

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        try {
            if (line.front() == '[') {
                if (line.back() != ']' || line.substr(0, 6) != "[case ") {
                    throw ParseError(0, "expected '[case N]'");
                }
                flush();
                current.emplace();
                current->id = parse_number<int>(line.substr(6, line.size() - 7), "case id");
                seen.clear();
                case_line = line_no;
                continue;
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) throw ParseError(0, "expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (!current) {
                if (key == "format") {
                    catalog.format_version = parse_number<int>(value, "format");
                    if (catalog.format_version != 1) throw ParseError(0, "unsupported format version");
                    have_format = true;
                } else if (key == "source") {
                    catalog.source = std::string(value);
                } else {
                    throw ParseError(0, "unknown header key '" + key + "'");
                }
                continue;
            }
            const bool repeatable = key == "witness";
            if (!repeatable && !seen.insert(key).second) throw ParseError(0, "duplicate key '" + key + "'");
            if (key == "T") {
                current->t = parse_t(value);
            } else if (key == "fibers") {
                current->fibers = FiberConfig::parse(value);
            } else if (key == "EK") {
                current->mw_free = parse_lattice(value);
            } else if (key == "torsion") {
                current->torsion = Torsion::parse(value);
            } else if (key == "mu") {
                current->mu = Rational::parse(value);
            } else if (key == "c_max") {
                current->stored_c_max = Rational::parse(value);
            } else if (key == "c_min") {
                current->stored_c_min = Rational::parse(value);
            } else if (key == "delta") {
                current->stored_delta = Rational::parse(value);
            } else if (key == "provenance") {
                current->provenance[""] = std::string(value);
            } else if (key.rfind("provenance.", 0) == 0) {
                current->provenance[key.substr(11)] = std::string(value);
            } else if (key == "witness") {
                current->overrides.push_back(WitnessOverride::parse(value));
            } else {
                throw ParseError(0, "unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            if (e.line() != 0) throw;
            std::string what = e.what();
            if (what.rfind("line 0: ", 0) == 0) what = what.substr(8);
            throw ParseError(line_no, what);
        }
    }
    flush();
    if (!have_format && !catalog.cases_.empty()) throw ParseError(1, "missing 'format = 1' header");
    return catalog;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::NotFound, "cannot open catalog '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Catalog Catalog::embedded() {
    static const Catalog catalog = parse(embedded_catalog_text());
    return catalog;
}

Catalog Catalog::load_default(const std::optional<std::string>& path) {
    if (path) return load_file(*path);
    if (const char* env = std::getenv(std::string(kCatalogEnvVar).c_str()); env != nullptr && *env != '\0') {
        return load_file(env);
    }
    return embedded();
}

std::string Catalog::save() const {
    std::ostringstream os;
    os << "format = " << format_version << "\n";
    if (!source.empty()) os << "source = " << source << "\n";
    for (const auto& [id, c] : cases_) {
        os << "\n[case " << id << "]\n";
        os << "T = " << t_string(c.t) << "\n";
        if (c.fibers) os << "fibers = " << c.fibers->str() << "\n";
        os << "EK = " << to_string(c.mw_free) << "\n";
        os << "torsion = " << c.torsion.str() << "\n";
        if (c.mu) os << "mu = " << *c.mu << "\n";
        if (c.stored_c_max) os << "c_max = " << *c.stored_c_max << "\n";
        if (c.stored_c_min) os << "c_min = " << *c.stored_c_min << "\n";
        if (c.stored_delta) os << "delta = " << *c.stored_delta << "\n";
        for (const auto& w : c.overrides) os << "witness = " << w.str() << "\n";
        for (const auto& [field, tag] : c.provenance) {
            os << (field.empty() ? std::string("provenance") : "provenance." + field) << " = " << tag << "\n";
        }
    }
    return os.str();
}

void Catalog::add(SurfaceCase c) {
    if (cases_.count(c.id)) throw ValidationError(c.id, "duplicate case id");
    c.finalize();
    const int id = c.id;
    cases_.emplace(id, std::move(c));
}

const SurfaceCase& Catalog::lookup(int id) const {
    const auto it = cases_.find(id);
    if (it == cases_.end()) throw Error(ErrorCode::NotFound, "no case " + std::to_string(id) + " in the catalog");
    return it->second;
}

std::vector<const SurfaceCase*> Catalog::lookup_t(const std::vector<AdeLabel>& t) const {
    std::vector<AdeLabel> key = t;
    std::stable_sort(key.begin(), key.end(), canonical_less);
    std::vector<const SurfaceCase*> out;
    for (const auto& [id, c] : cases_)
        if (c.t == key) out.push_back(&c);
    return out;
}

std::vector<const SurfaceCase*> Catalog::lookup_fibers(std::string_view fibers) const {
    const auto t = FiberConfig::parse(fibers).t_lattices();
    auto out = lookup_t(t);
    if (out.empty()) throw Error(ErrorCode::NotFound, "no case with T = " + t_string(t));
    return out;
}

}  // namespace resgaps
