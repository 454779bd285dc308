#include "resgaps/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "resgaps/error.hpp"

namespace resgaps {

LatticeSpec LatticeSpec::root_a(int n) {
    LatticeSpec s;
    s.kind = Kind::RootA;
    s.n = n;
    return s;
}

LatticeSpec LatticeSpec::root_d(int n) {
    LatticeSpec s;
    s.kind = Kind::RootD;
    s.n = n;
    return s;
}

LatticeSpec LatticeSpec::root_e(int n) {
    LatticeSpec s;
    s.kind = Kind::RootE;
    s.n = n;
    return s;
}

LatticeSpec LatticeSpec::scaled_unit(const Rational& q) {
    LatticeSpec s;
    s.kind = Kind::ScaledUnit;
    s.q = q;
    return s;
}

LatticeSpec LatticeSpec::explicit_gram(const SymMatrix& gram) {
    LatticeSpec s;
    s.kind = Kind::ExplicitGram;
    s.gram = gram;
    return s;
}

LatticeSpec LatticeSpec::direct_sum(std::vector<LatticeSpec> parts) {
    std::vector<LatticeSpec> flat;
    for (auto& p : parts) {
        if (p.kind == Kind::DirectSum) {
            for (auto& c : p.children) flat.push_back(std::move(c));
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.size() == 1) return std::move(flat.front());
    LatticeSpec s;
    s.kind = Kind::DirectSum;
    s.children = std::move(flat);
    return s;
}

LatticeSpec LatticeSpec::dual(LatticeSpec child) {
    LatticeSpec s;
    s.kind = Kind::Dual;
    s.children.push_back(std::move(child));
    return s;
}

bool operator==(const LatticeSpec& a, const LatticeSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case LatticeSpec::Kind::RootA:
        case LatticeSpec::Kind::RootD:
        case LatticeSpec::Kind::RootE: return a.n == b.n;
        case LatticeSpec::Kind::ScaledUnit: return a.q == b.q;
        case LatticeSpec::Kind::ExplicitGram: return a.gram == b.gram;
        case LatticeSpec::Kind::DirectSum:
        case LatticeSpec::Kind::Dual: return a.children == b.children;
    }
    return false;
}

SymMatrix root_gram(char family, int n) {
    auto bad = [&] {
        return Error(ErrorCode::MalformedSpec, std::string("no root lattice ") + family + std::to_string(n));
    };
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case 'A':
            if (n < 1) throw bad();
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'D':
            if (n < 4) throw bad();
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw bad();
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
            for (int i = 4; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        default: throw bad();
    }
    SymMatrix g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.set(i, i, 2);
    for (auto [i, j] : edges) g.set(i, j, -1);
    return g;
}

SymMatrix realize(const LatticeSpec& spec) {
    using K = LatticeSpec::Kind;
    switch (spec.kind) {
        case K::RootA: return root_gram('A', spec.n);
        case K::RootD: return root_gram('D', spec.n);
        case K::RootE: return root_gram('E', spec.n);
        case K::ScaledUnit:
            if (spec.q.sign() <= 0) throw Error(ErrorCode::MalformedSpec, "scaled unit must be positive: " + spec.q.str());
            return SymMatrix{{spec.q}};
        case K::ExplicitGram:
            if (!is_positive_definite(spec.gram)) {
                throw Error(ErrorCode::MalformedSpec, "explicit Gram is not positive-definite: " + spec.gram.str());
            }
            return spec.gram;
        case K::DirectSum: {
            std::vector<SymMatrix> blocks;
            blocks.reserve(spec.children.size());
            for (const auto& c : spec.children) blocks.push_back(realize(c));
            return SymMatrix::block_diagonal(blocks);
        }
        case K::Dual:
            if (spec.children.size() != 1) throw Error(ErrorCode::MalformedSpec, "dual takes one operand");
            return inverse(realize(spec.children.front()));
    }
    throw Error(ErrorCode::MalformedSpec, "unknown lattice node");
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string text) : text_(std::move(text)) {}

    LatticeSpec parse() {
        if (text_ == "0") return LatticeSpec::zero();
        LatticeSpec s = expr();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(0, "lattice '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || start == pos_) fail("expected an integer");
        return value;
    }

    Rational rational_until(char close) {
        const std::size_t end = text_.find(close, pos_);
        if (end == std::string::npos) fail(std::string("missing '") + close + "'");
        try {
            Rational q = Rational::parse(std::string_view(text_).substr(pos_, end - pos_));
            pos_ = end + 1;
            return q;
        } catch (const ParseError&) {
            fail("bad rational");
        }
    }

    SymMatrix matrix() {
        if (!peek('[')) fail("expected a matrix");
        int depth = 0;
        std::size_t end = pos_;
        for (; end < text_.size(); ++end) {
            if (text_[end] == '[') ++depth;
            if (text_[end] == ']' && --depth == 0) break;
        }
        if (end == text_.size()) fail("unterminated matrix");
        try {
            SymMatrix m = SymMatrix::parse(std::string_view(text_).substr(pos_, end + 1 - pos_));
            pos_ = end + 1;
            return m;
        } catch (const Error& e) {
            fail(e.what());
        }
    }

    LatticeSpec expr() {
        std::vector<LatticeSpec> parts;
        parts.push_back(term());
        while (peek('+')) {
            ++pos_;
            parts.push_back(term());
        }
        return LatticeSpec::direct_sum(std::move(parts));
    }

    LatticeSpec term() {
        LatticeSpec s = atom();
        while (true) {
            if (peek('*')) {
                ++pos_;
                s = LatticeSpec::dual(std::move(s));
            } else if (peek('^')) {
                ++pos_;
                const int k = integer();
                if (k < 1) fail("power must be positive");
                std::vector<LatticeSpec> copies(static_cast<std::size_t>(k), s);
                s = LatticeSpec::direct_sum(std::move(copies));
            } else {
                return s;
            }
        }
    }

    LatticeSpec atom() {
        if (pos_ >= text_.size()) fail("unexpected end");
        const char c = text_[pos_];
        if (c == 'A' || c == 'D' || c == 'E') {
            ++pos_;
            const int n = integer();
            if (c == 'A') return LatticeSpec::root_a(n);
            if (c == 'D') return LatticeSpec::root_d(n);
            return LatticeSpec::root_e(n);
        }
        if (c == '<') {
            ++pos_;
            return LatticeSpec::scaled_unit(rational_until('>'));
        }
        if (c == '[') return LatticeSpec::explicit_gram(matrix());
        if (c == '(') {
            const std::size_t close = text_.find(')', pos_);
            if (close != std::string::npos && close + 1 < text_.size() && text_[close + 1] == '[') {
                const std::size_t save = pos_;
                ++pos_;
                try {
                    const Rational q = Rational::parse(std::string_view(text_).substr(pos_, close - pos_));
                    pos_ = close + 1;
                    return LatticeSpec::explicit_gram(matrix().scaled(q));
                } catch (const ParseError&) {
                    pos_ = save;
                }
            }
            ++pos_;
            LatticeSpec inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string text_;
    std::size_t pos_ = 0;
};

std::string atom_string(const LatticeSpec& s) {
    const std::string body = to_string(s);
    return s.kind == LatticeSpec::Kind::DirectSum ? "(" + body + ")" : body;
}

}  // namespace

LatticeSpec parse_lattice(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ParseError(0, "empty lattice expression");
    return SpecParser(std::move(compact)).parse();
}

std::string to_string(const LatticeSpec& spec) {
    using K = LatticeSpec::Kind;
    switch (spec.kind) {
        case K::RootA: return "A" + std::to_string(spec.n);
        case K::RootD: return "D" + std::to_string(spec.n);
        case K::RootE: return "E" + std::to_string(spec.n);
        case K::ScaledUnit: return "<" + spec.q.str() + ">";
        case K::ExplicitGram: return spec.gram.str();
        case K::Dual: return atom_string(spec.children.front()) + "*";
        case K::DirectSum: {
            if (spec.children.empty()) return "0";
            std::string out;
            for (std::size_t i = 0; i < spec.children.size();) {
                std::size_t j = i + 1;
                while (j < spec.children.size() && spec.children[j] == spec.children[i]) ++j;
                if (!out.empty()) out += "+";
                out += atom_string(spec.children[i]);
                if (j - i > 1) out += "^" + std::to_string(j - i);
                i = j;
            }
            return out;
        }
    }
    return "?";
}

Enumerator::Enumerator(const SymMatrix& gram, std::uint64_t budget) : gram_(gram), budget_(budget) {
    const std::size_t n = gram.dim();
    SymMatrix reversed(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) reversed.set(i, j, gram(n - 1 - i, n - 1 - j));
    const Ldlt f = ldlt(reversed);
    lower_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lower_[i][j] = f.lower(i, j);
    diag_ = f.diagonal;
}

namespace {

struct Walk {
    const std::vector<std::vector<Rational>>& lower;
    const std::vector<Rational>& diag;
    const Rational& lo;
    const Rational& hi;
    const Enumerator::Visitor& visitor;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<std::int64_t> y;  // reversed coordinates
    std::vector<std::int64_t> x;  // natural coordinates

    // Returns false when the visitor asked to stop.
    bool descend(std::size_t level, const Rational& used, bool all_zero) {
        const std::size_t n = diag.size();
        const std::size_t j = level;  // y index, running n-1 .. 0
        Rational center;
        for (std::size_t i = j + 1; i < n; ++i)
            if (y[i] != 0) center -= lower[i][j] * Rational(static_cast<long>(y[i]));
        const Rational room = hi - used;
        const Rational t = room / diag[j];
        const Integer s = isqrt(t.floor());
        Integer first = (center - Rational(s) - 1).floor();
        Integer last = (center + Rational(s) + 1).ceil();
        if (all_zero && first < 0) first = 0;
        // at the leaf, |v - center| <= s_in - 1 cannot reach lo
        Integer hole_first = 1;
        Integer hole_last = 0;
        if (j == 0 && lo > used) {
            const Integer s_in = isqrt(((lo - used) / diag[j]).floor());
            if (s_in >= 1) {
                hole_first = (center - Rational(Integer(s_in - 1))).ceil();
                hole_last = (center + Rational(Integer(s_in - 1))).floor();
            }
        }
        for (Integer v = first; v <= last; ++v) {
            if (v >= hole_first && v <= hole_last) {
                v = hole_last;
                continue;
            }
            const Rational off = Rational(v) - center;
            const Rational part = diag[j] * off * off;
            if (part > room) {
                if (Rational(v) > center) break;
                continue;
            }
            if (++nodes > budget) {
                throw Error(ErrorCode::BudgetExceeded,
                            "enumeration exceeded budget of " + std::to_string(budget) + " nodes");
            }
            y[j] = to_int64(v);
            x[n - 1 - j] = y[j];
            const Rational total = used + part;
            const bool zero_so_far = all_zero && v == 0;
            if (j == 0) {
                if (!zero_so_far && total >= lo && !visitor(x, total)) return false;
            } else if (!descend(j - 1, total, zero_so_far)) {
                return false;
            }
        }
        y[j] = 0;
        x[n - 1 - j] = 0;
        return true;
    }
};

}  // namespace

bool Enumerator::visit(const Rational& lo, const Rational& hi, const Visitor& visitor) const {
    const std::size_t n = dim();
    if (n == 0 || hi.sign() <= 0 || lo > hi) return true;
    Walk w{lower_, diag_, lo, hi, visitor, budget_, 0, std::vector<std::int64_t>(n), std::vector<std::int64_t>(n)};
    return w.descend(n - 1, Rational(0), true);
}

std::optional<LatticeVector> Enumerator::find_norm(
    const Rational& target, const std::function<bool(std::span<const std::int64_t>)>& accept) const {
    std::optional<LatticeVector> found;
    visit(target, target, [&](std::span<const std::int64_t> c, const Rational& norm) {
        if (accept && !accept(c)) return true;
        found = LatticeVector{std::vector<std::int64_t>(c.begin(), c.end()), norm};
        return false;
    });
    return found;
}

std::vector<LatticeVector> short_vectors(const SymMatrix& gram, const Rational& bound, std::uint64_t budget) {
    if (bound.sign() < 0) throw Error(ErrorCode::DimensionMismatch, "negative enumeration bound " + bound.str());
    std::vector<LatticeVector> out;
    out.push_back({std::vector<std::int64_t>(gram.dim()), Rational(0)});
    const Enumerator e(gram, budget);
    e.visit(Rational(0), bound, [&](std::span<const std::int64_t> c, const Rational& norm) {
        out.push_back({std::vector<std::int64_t>(c.begin(), c.end()), norm});
        return true;
    });
    std::stable_sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.coords < b.coords;
    });
    return out;
}

bool in_narrow(const SymMatrix& free_gram, std::span<const std::int64_t> coords) {
    for (const auto& v : apply(free_gram, coords))
        if (!v.is_integer()) return false;
    return true;
}

std::vector<std::int64_t> narrow_to_free(const SymMatrix& narrow_gram, std::span<const std::int64_t> y) {
    std::vector<std::int64_t> x;
    for (const auto& v : apply(narrow_gram, y)) {
        if (!v.is_integer()) throw Error(ErrorCode::NotIntegral, "narrow Gram is not integral");
        x.push_back(to_int64(v.numerator()));
    }
    return x;
}

}  // namespace resgaps
