// resgaps: gap numbers of rational elliptic surfaces from the command line.
//
// Exit codes: 0 ok, 1 other failure, 2 not found, 3 parse/validation,
// 4 enumeration budget exceeded, 5 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resgaps/catalog.hpp"
#include "resgaps/error.hpp"
#include "resgaps/gap_engine.hpp"
#include "resgaps/quadratic_form.hpp"
#include "resgaps/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace resgaps;

constexpr int kExitFailure = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitMismatch = 5;

int exit_code(const Error& e) {
    switch (e.code()) {
        case ErrorCode::NotFound: return kExitNotFound;
        case ErrorCode::ParseError:
        case ErrorCode::ValidationError:
        case ErrorCode::NotIntegral:
        case ErrorCode::NotPositiveDefinite: return kExitParse;
        case ErrorCode::BudgetExceeded: return kExitBudget;
        default: return kExitFailure;
    }
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

std::string tuple_str(const std::vector<std::int64_t>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

json matrix_json(const SymMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

json witness_json(const WitnessTrace& w) {
    json j;
    j["route"] = std::string(to_string(w.route));
    j["coords"] = w.coords;
    j["add_torsion"] = w.add_torsion;
    j["height"] = w.height.str();
    j["p_dot_o"] = w.p_dot_o;
    j["p_dot_q"] = w.p_dot_q ? json(*w.p_dot_q) : json(nullptr);
    json contr = json::array();
    for (const auto& c : w.contributions) contr.push_back(c.str());
    j["contributions"] = contr;
    j["derivation"] = w.derivation;
    return j;
}

json verdict_json(const GapVerdict& v) {
    json j;
    j["k"] = v.k;
    j["status"] = lower(to_string(v.status));
    if (v.witness) j["witness"] = witness_json(*v.witness);
    if (v.certificate) {
        j["certificate"] = {{"norm_lo", v.certificate->norm_lo.str()},
                            {"norm_hi", v.certificate->norm_hi.str()},
                            {"vectors_examined", v.certificate->vectors_examined},
                            {"detail", v.certificate->detail}};
    }
    if (v.status == Status::Unknown) j["reason"] = v.reason;
    return j;
}

std::string decimal(const Rational& q, int digits = 6) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Integer scaled = (q * Rational(scale)).floor();
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string f = frac.get_str();
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    return whole.get_str() + "." + f;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Session {
    std::optional<std::string> catalog_path;
    bool as_json = false;
    std::optional<Catalog> catalog;

    const Catalog& cat() {
        if (!catalog) catalog = Catalog::load_default(catalog_path);
        return *catalog;
    }
};

// analyze

json case_json(const SurfaceCase& c) {
    const Bounds& b = c.bounds();
    json j;
    j["id"] = c.id;
    j["T"] = t_string(c.t);
    j["fibers"] = c.fibers ? json(c.fibers->str()) : json(nullptr);
    j["rank"] = c.rank();
    j["torsion"] = c.torsion.str();
    j["mu"] = c.mu ? json(c.mu->str()) : json(nullptr);
    j["c_max"] = b.c_max.str();
    j["c_min"] = b.c_min.str();
    j["delta"] = b.delta.str();
    j["free_gram"] = matrix_json(c.free_gram());
    if (c.rank() > 0) {
        j["narrow_gram"] = matrix_json(c.narrow_gram());
        j["narrow_det"] = c.narrow_det().str();
        j["q_x"] = matrix_json(build_qx(c).matrix());
    } else {
        j["narrow_gram"] = nullptr;
        j["narrow_det"] = c.narrow_det().str();
        j["q_x"] = nullptr;
    }
    return j;
}

void print_case(const SurfaceCase& c) {
    const Bounds& b = c.bounds();
    std::cout << "case " << c.id << "\n"
              << "  T        " << t_string(c.t) << "\n";
    if (c.fibers) std::cout << "  fibers   " << c.fibers->str() << "\n";
    std::cout << "  rank     " << c.rank() << "\n"
              << "  torsion  " << c.torsion.str() << "\n"
              << "  mu       " << (c.mu ? c.mu->str() : "-") << "\n"
              << "  c_max    " << b.c_max << "\n"
              << "  c_min    " << b.c_min << "\n"
              << "  delta    " << b.delta << "\n"
              << "  E(K)     " << to_string(c.mw_free) << "  " << c.free_gram().str() << "\n";
    if (c.rank() > 0) {
        std::cout << "  narrow   " << c.narrow_gram().str() << "  det " << c.narrow_det() << "\n"
                  << "  Q_X      " << build_qx(c).matrix().str() << "\n";
    }
}

int cmd_analyze(Session& s, std::optional<int> id, std::optional<std::string> fibers) {
    if (id) {
        const SurfaceCase& c = s.cat().lookup(*id);
        if (s.as_json) print_json({{"command", "analyze"}, {"args", {{"case", *id}}}, {"case", case_json(c)}});
        else print_case(c);
        return 0;
    }
    const FiberConfig config = FiberConfig::parse(*fibers);
    const Bounds b = bounds(config);
    const std::string t = t_string(config.t_lattices());
    std::vector<const SurfaceCase*> matches;
    bool found = true;
    try {
        matches = s.cat().lookup_fibers(*fibers);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotFound) throw;
        found = false;
    }
    if (s.as_json) {
        json cases = json::array();
        for (const auto* c : matches) cases.push_back(case_json(*c));
        print_json({{"command", "analyze"},
                    {"args", {{"fibers", *fibers}}},
                    {"T", t},
                    {"c_max", b.c_max.str()},
                    {"c_min", b.c_min.str()},
                    {"delta", b.delta.str()},
                    {"cases", cases}});
    } else {
        std::cout << "fibers   " << config.str() << "\n"
                  << "T        " << t << "\n"
                  << "c_max    " << b.c_max << "\n"
                  << "c_min    " << b.c_min << "\n"
                  << "delta    " << b.delta << "\n";
        for (const auto* c : matches) print_case(*c);
    }
    if (!found) {
        std::cerr << "resgaps: no catalog case has T = " << t << "\n";
        return kExitNotFound;
    }
    return 0;
}

// gaps

std::string verdict_line(const GapVerdict& v) {
    std::ostringstream os;
    os << "k=" << v.k << "  " << to_string(v.status);
    if (v.witness) {
        os << "  " << to_string(v.witness->route) << " " << tuple_str(v.witness->coords)
           << (v.witness->add_torsion ? "+Q" : "") << " h=" << v.witness->height;
    } else if (v.certificate) {
        os << "  norms [" << v.certificate->norm_lo << ", " << v.certificate->norm_hi << "], "
           << v.certificate->vectors_examined << " vectors examined";
    } else if (!v.reason.empty()) {
        os << "  " << v.reason;
    }
    return os.str();
}

int cmd_gaps(Session& s, int id, std::int64_t max) {
    const SurfaceCase& c = s.cat().lookup(id);
    json verdicts = json::array();
    std::vector<std::int64_t> gaps, unknown, budget;
    for (std::int64_t k = 0; k <= max; ++k) {
        try {
            const GapVerdict v = decide(c, k);
            if (v.status == Status::Gap) gaps.push_back(k);
            if (v.status == Status::Unknown) unknown.push_back(k);
            if (s.as_json) verdicts.push_back(verdict_json(v));
            else std::cout << verdict_line(v) << "\n";
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            budget.push_back(k);
            if (s.as_json) verdicts.push_back({{"k", k}, {"status", "budget-exceeded"}, {"reason", e.what()}});
            else std::cout << "k=" << k << "  budget exceeded: " << e.what() << "\n";
        }
    }
    if (s.as_json) {
        print_json({{"command", "gaps"},
                    {"args", {{"case", id}, {"max", max}}},
                    {"verdicts", verdicts},
                    {"summary", {{"gaps", gaps}, {"unknown", unknown}, {"budget_exceeded", budget}}}});
    } else {
        auto list = [](const std::vector<std::int64_t>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
            return out.empty() ? std::string("none") : out;
        };
        std::cout << "gaps: " << list(gaps) << "\n";
        if (!unknown.empty()) std::cout << "unknown: " << list(unknown) << "\n";
        if (!budget.empty()) std::cout << "budget exceeded: " << list(budget) << "\n";
    }
    return budget.empty() ? 0 : kExitBudget;
}

// density

int cmd_density(Session& s, int id, std::int64_t max) {
    const SurfaceCase& c = s.cat().lookup(id);
    const DensityReport r = gap_density(c, max);
    if (s.as_json) {
        print_json({{"command", "density"},
                    {"args", {{"case", id}, {"max", max}}},
                    {"n", r.n},
                    {"gaps", r.gaps},
                    {"unknown", r.unknown},
                    {"density", r.density.str()},
                    {"density_decimal", decimal(r.density)}});
    } else {
        std::cout << "case " << id << ", k = 1.." << max << "\n"
                  << "  gaps     " << r.gaps << "\n"
                  << "  unknown  " << r.unknown << "\n"
                  << "  density  " << r.density << " = " << decimal(r.density) << "\n";
    }
    return 0;
}

// verify

int cmd_verify(Session& s, const std::string& target) {
    const VerifyReport r = verify_target(s.cat(), target);
    if (s.as_json) {
        json cells = json::array();
        for (const auto& c : r.cells)
            cells.push_back({{"row", c.row}, {"field", c.field}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
        print_json({{"command", "verify"},
                    {"args", {{"target", target}}},
                    {"cells", cells},
                    {"checked", r.cells.size()},
                    {"failures", r.failures()}});
    } else {
        for (const auto& c : r.cells) {
            std::cout << (c.ok ? "ok    " : "FAIL  ") << c.row << "  " << c.field << ": ";
            if (c.ok) std::cout << c.actual << "\n";
            else std::cout << "expected " << c.expected << ", got " << c.actual << "\n";
        }
        std::cout << target << ": " << r.cells.size() - r.failures() << "/" << r.cells.size() << " cells reproduced\n";
    }
    return r.passed() ? 0 : kExitMismatch;
}

// represent

int cmd_represent(Session& s, std::optional<int> id, std::optional<std::string> form_file, const std::string& target_text,
                  std::uint64_t budget) {
    Integer target;
    if (target_text.empty() || target.set_str(target_text, 10) != 0 || target < 0)
        throw ParseError(0, "target must be a nonnegative integer: '" + target_text + "'");
    std::optional<IntQuadraticForm> form;
    if (id) {
        form.emplace(build_qx(s.cat().lookup(*id)));
    } else {
        std::ifstream in(*form_file);
        if (!in) throw Error(ErrorCode::NotFound, "cannot open form file: " + *form_file);
        std::stringstream buf;
        buf << in.rdbuf();
        form.emplace(IntQuadraticForm::parse(buf.str()));
    }
    const auto w = represents(*form, target, budget);
    if (s.as_json) {
        json args = id ? json{{"case", *id}, {"target", target.get_str()}}
                       : json{{"form", *form_file}, {"target", target.get_str()}};
        print_json({{"command", "represent"},
                    {"args", args},
                    {"form", matrix_json(form->matrix())},
                    {"represented", w.has_value()},
                    {"witness", w ? json(*w) : json(nullptr)}});
    } else if (w) {
        std::cout << tuple_str(*w) << "\n";
    } else {
        std::cout << "not represented\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gap numbers of rational elliptic surfaces"};
    app.require_subcommand(1);
    Session s;
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Catalog file (default: $RESGAPS_CATALOG, then the built-in catalog)");
    app.add_flag("--json", s.as_json, "Machine-readable output");

    auto* analyze = app.add_subcommand("analyze", "Lattice data, bounds and Q_X of a case");
    std::optional<int> a_case;
    std::optional<std::string> a_fibers;
    auto* a_case_opt = analyze->add_option("--case", a_case, "Case number");
    auto* a_fib_opt = analyze->add_option("--fibers", a_fibers, "Kodaira fibers, e.g. I4,IV,III,I1");
    a_case_opt->excludes(a_fib_opt);
    analyze->add_flag("--json", s.as_json, "Machine-readable output");

    auto* gaps = app.add_subcommand("gaps", "Verdict for every k in 0..max");
    int g_case = 0;
    std::int64_t g_max = 0;
    gaps->add_option("--case", g_case, "Case number")->required();
    gaps->add_option("--max", g_max, "Largest k")->required()->check(CLI::NonNegativeNumber);
    gaps->add_flag("--json", s.as_json, "Machine-readable output");

    auto* verify = app.add_subcommand("verify", "Re-derive a published table and compare");
    std::string v_target;
    std::vector<std::string> targets;
    for (auto t : verify_targets()) targets.emplace_back(t);
    verify->add_option("--target", v_target, "What to check")->required()->check(CLI::IsMember(targets));
    verify->add_flag("--json", s.as_json, "Machine-readable output");

    auto* density = app.add_subcommand("density", "Share of gap numbers among 1..max");
    int d_case = 0;
    std::int64_t d_max = 0;
    density->add_option("--case", d_case, "Case number")->required();
    density->add_option("--max", d_max, "Largest k")->required()->check(CLI::PositiveNumber);
    density->add_flag("--json", s.as_json, "Machine-readable output");

    auto* represent = app.add_subcommand("represent", "Solve Q(x) = target for Q_X of a case or a form file");
    std::optional<int> r_case;
    std::optional<std::string> r_form;
    std::string r_target;
    auto* r_case_opt = represent->add_option("--case", r_case, "Case number (uses Q_X)");
    auto* r_form_opt = represent->add_option("--form", r_form, "File holding an integer-valued Gram matrix");
    r_case_opt->excludes(r_form_opt);
    represent->add_option("--target", r_target, "Nonnegative integer")->required();
    std::uint64_t r_budget = kDefaultBudget;
    represent->add_option("--budget", r_budget, "Search nodes before giving up")->check(CLI::PositiveNumber);
    represent->add_flag("--json", s.as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }
    if (!catalog_path.empty()) s.catalog_path = catalog_path;

    try {
        if (analyze->parsed()) {
            if (!a_case && !a_fibers) {
                std::cerr << "resgaps analyze: one of --case or --fibers is required\n";
                return kExitParse;
            }
            return cmd_analyze(s, a_case, a_fibers);
        }
        if (gaps->parsed()) return cmd_gaps(s, g_case, g_max);
        if (verify->parsed()) return cmd_verify(s, v_target);
        if (density->parsed()) return cmd_density(s, d_case, d_max);
        if (represent->parsed()) {
            if (!r_case && !r_form) {
                std::cerr << "resgaps represent: one of --case or --form is required\n";
                return kExitParse;
            }
            return cmd_represent(s, r_case, r_form, r_target, r_budget);
        }
    } catch (const Error& e) {
        std::cerr << "resgaps: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "resgaps: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
