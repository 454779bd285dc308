#include "resgaps/fiber.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "resgaps/error.hpp"

namespace resgaps {

namespace {

int parse_count(std::string_view digits, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || digits.front() == '-' || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError(0, "bad number in '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int family_order(char f) { return f == 'E' ? 0 : (f == 'D' ? 1 : 2); }

Error invalid(const AdeLabel& t, int i) {
    return Error(ErrorCode::InvalidComponent, "component " + std::to_string(i) + " is not valid for " + t.str());
}

int max_index(const AdeLabel& t) {
    switch (t.family) {
        case 'A': return t.rank;
        case 'D': return 3;
        default: return t.rank == 6 ? 2 : (t.rank == 7 ? 1 : 0);
    }
}

void check_index(const AdeLabel& t, int i) {
    if (i < 0 || i > max_index(t)) throw invalid(t, i);
}

}  // namespace

AdeLabel AdeLabel::parse(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || (text[0] != 'A' && text[0] != 'D' && text[0] != 'E')) {
        throw ParseError(0, "not an ADE label: '" + std::string(text) + "'");
    }
    AdeLabel t{text[0], parse_count(text.substr(1), text)};
    const bool ok = (t.family == 'A' && t.rank >= 1) || (t.family == 'D' && t.rank >= 4) ||
                    (t.family == 'E' && t.rank >= 6 && t.rank <= 8);
    if (!ok) throw ParseError(0, "no root lattice '" + std::string(text) + "'");
    return t;
}

std::string AdeLabel::str() const { return std::string(1, family) + std::to_string(rank); }

bool canonical_less(const AdeLabel& a, const AdeLabel& b) {
    if (family_order(a.family) != family_order(b.family)) return family_order(a.family) < family_order(b.family);
    return a.rank > b.rank;
}

std::vector<AdeLabel> parse_t(std::string_view text) {
    text = trim(text);
    std::vector<AdeLabel> out;
    if (text == "0" || text.empty()) return out;
    while (true) {
        const std::size_t plus = text.find('+');
        std::string_view part = trim(text.substr(0, plus));
        int power = 1;
        if (const std::size_t caret = part.find('^'); caret != std::string_view::npos) {
            power = parse_count(trim(part.substr(caret + 1)), part);
            if (power < 1) throw ParseError(0, "power must be positive in '" + std::string(part) + "'");
            part = trim(part.substr(0, caret));
        }
        const AdeLabel t = AdeLabel::parse(part);
        out.insert(out.end(), static_cast<std::size_t>(power), t);
        if (plus == std::string_view::npos) break;
        text = text.substr(plus + 1);
    }
    std::stable_sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::string t_string(std::vector<AdeLabel> labels) {
    if (labels.empty()) return "0";
    std::stable_sort(labels.begin(), labels.end(), canonical_less);
    std::string out;
    for (std::size_t i = 0; i < labels.size();) {
        std::size_t j = i + 1;
        while (j < labels.size() && labels[j] == labels[i]) ++j;
        if (!out.empty()) out += "+";
        out += labels[i].str();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

KodairaFiber KodairaFiber::parse(std::string_view text) {
    text = trim(text);
    using K = Kind;
    if (text == "II") return {K::II, 0};
    if (text == "III") return {K::III, 0};
    if (text == "IV") return {K::IV, 0};
    if (text == "II*") return {K::IIStar, 0};
    if (text == "III*") return {K::IIIStar, 0};
    if (text == "IV*") return {K::IVStar, 0};
    if (text.size() >= 2 && text[0] == 'I') {
        const bool star = text.back() == '*';
        const std::string_view digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
        const int n = parse_count(digits, text);
        if (star) return {K::InStar, n};
        if (n >= 1) return {K::In, n};
    }
    throw ParseError(0, "not a Kodaira symbol: '" + std::string(text) + "'");
}

std::string KodairaFiber::str() const {
    switch (kind) {
        case Kind::In: return "I" + std::to_string(n);
        case Kind::InStar: return "I" + std::to_string(n) + "*";
        case Kind::II: return "II";
        case Kind::III: return "III";
        case Kind::IV: return "IV";
        case Kind::IIStar: return "II*";
        case Kind::IIIStar: return "III*";
        case Kind::IVStar: return "IV*";
    }
    return "?";
}

bool KodairaFiber::reducible() const {
    if (kind == Kind::In) return n >= 2;
    return kind != Kind::II;
}

AdeLabel KodairaFiber::lattice() const {
    switch (kind) {
        case Kind::In:
            if (n >= 2) return {'A', n - 1};
            break;
        case Kind::InStar: return {'D', n + 4};
        case Kind::III: return {'A', 1};
        case Kind::IV: return {'A', 2};
        case Kind::IIStar: return {'E', 8};
        case Kind::IIIStar: return {'E', 7};
        case Kind::IVStar: return {'E', 6};
        case Kind::II: break;
    }
    throw Error(ErrorCode::InvalidComponent, "fiber " + str() + " is irreducible");
}

FiberConfig FiberConfig::parse(std::string_view text) {
    FiberConfig config;
    while (true) {
        const std::size_t comma = text.find(',');
        config.fibers.push_back(KodairaFiber::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return config;
}

std::string FiberConfig::str() const {
    std::string out;
    for (const auto& f : fibers) {
        if (!out.empty()) out += ",";
        out += f.str();
    }
    return out;
}

std::vector<AdeLabel> FiberConfig::t_lattices() const {
    std::vector<AdeLabel> out;
    for (const auto& f : fibers)
        if (f.reducible()) out.push_back(f.lattice());
    std::stable_sort(out.begin(), out.end(), canonical_less);
    return out;
}

Rational contr_single(const AdeLabel& t, int i) {
    check_index(t, i);
    if (i == 0) return 0;
    switch (t.family) {
        case 'A': {
            const int n = t.rank + 1;
            return Rational(i * (n - i), n);
        }
        case 'D': {
            const int n = t.rank - 4;
            return i == 1 ? Rational(1) : Rational(1) + Rational(n, 4);
        }
        default: return t.rank == 6 ? Rational(4, 3) : Rational(3, 2);
    }
}

Rational contr_pair(const AdeLabel& t, int i, int j) {
    if (i > j) std::swap(i, j);
    const bool undefined = (t.family == 'A' && t.rank == 1) || (t.family == 'E' && t.rank == 7);
    if (undefined && i != j && i != 0) {
        throw Error(ErrorCode::UndefinedPair, "pair contribution undefined for " + t.str());
    }
    check_index(t, i);
    check_index(t, j);
    if (i == 0) return 0;
    if (i == j) return contr_single(t, i);
    switch (t.family) {
        case 'A': {
            const int n = t.rank + 1;
            return Rational(i * (n - j), n);
        }
        case 'D': {
            const int n = t.rank - 4;
            return i == 1 ? Rational(1, 2) : Rational(1, 2) + Rational(n, 4);
        }
        default: return Rational(2, 3);  // E6, components 1 and 2
    }
}

Extremes extremes(const AdeLabel& t) {
    switch (t.family) {
        case 'A': {
            const int n = t.rank + 1;
            const int l = n / 2;
            return {Rational(l * (n - l), n), Rational(n - 1, n)};
        }
        case 'D': return {Rational(1) + Rational(t.rank - 4, 4), Rational(1)};
        default:
            if (t.rank == 6) return {Rational(4, 3), Rational(4, 3)};
            if (t.rank == 7) return {Rational(3, 2), Rational(3, 2)};
            throw Error(ErrorCode::NoPositiveContribution, "E8 has no positive contribution");
    }
}

Bounds bounds(std::span<const AdeLabel> t) {
    Bounds b;
    bool any = false;
    for (const auto& label : t) {
        if (label.family == 'E' && label.rank == 8) continue;
        const Extremes e = extremes(label);
        b.c_max += e.max;
        if (!any || e.min_positive < b.c_min) b.c_min = e.min_positive;
        any = true;
    }
    b.delta = b.c_max - b.c_min;
    return b;
}

Bounds bounds(const FiberConfig& config) {
    const auto t = config.t_lattices();
    return bounds(t);
}

Rational height(std::int64_t p_dot_o, std::span<const Rational> contributions) {
    Rational h = Rational(2) + Rational(2) * Rational(static_cast<long>(p_dot_o));
    for (const auto& c : contributions) h -= c;
    return h;
}

Rational pairing(std::int64_t p_dot_o, std::int64_t q_dot_o, std::int64_t p_dot_q,
                 std::span<const Rational> pair_contributions) {
    Rational v = Rational(1) + Rational(static_cast<long>(p_dot_o)) + Rational(static_cast<long>(q_dot_o)) -
                 Rational(static_cast<long>(p_dot_q));
    for (const auto& c : pair_contributions) v -= c;
    return v;
}

}  // namespace resgaps
