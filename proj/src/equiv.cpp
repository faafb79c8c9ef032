#include "cerl/equiv.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cerl/gen.hpp"
#include "cerl/parser.hpp"

namespace cerl {

namespace {

std::string render_outcome(const EvalOutcome& outcome) {
    if (const auto* s = std::get_if<Success>(&outcome))
        return render_value(s->value);
    return eval_error_name(std::get<EvalError>(outcome));
}

bool out_of_fuel(const EvalOutcome& outcome) {
    const auto* err = std::get_if<EvalError>(&outcome);
    return err && std::holds_alternative<OutOfFuel>(err->reason);
}

}  // namespace

std::string render_verdict(const EquivVerdict& verdict) {
    if (const auto* eq = std::get_if<Equivalent>(&verdict))
        return "equivalent " + render_value(eq->value);
    if (std::holds_alternative<Divergent>(verdict)) return "divergent";
    const auto& d = std::get<Distinct>(verdict);
    return "distinct left=" + render_outcome(d.left) +
           " right=" + render_outcome(d.right);
}

std::optional<EquivVerdict> check_equiv(const EquivCase& c,
                                        std::uint64_t fuel) {
    for (const auto& a : c.assumptions) {
        auto out = eval_expr(EvalConfig{a.env, c.clos, a.expr, fuel});
        const auto* s = std::get_if<Success>(&out);
        if (!s || !value_eq(s->value, a.expected)) return std::nullopt;
    }
    EvalOutcome left = eval_expr(EvalConfig{c.env, c.clos, c.left, fuel});
    EvalOutcome right = eval_expr(EvalConfig{c.env, c.clos, c.right, fuel});
    const auto* ls = std::get_if<Success>(&left);
    const auto* rs = std::get_if<Success>(&right);
    if (ls && rs && value_eq(ls->value, rs->value))
        return EquivVerdict{Equivalent{ls->value}};
    if (out_of_fuel(left) && out_of_fuel(right))
        return EquivVerdict{Divergent{}};
    return EquivVerdict{Distinct{std::move(left), std::move(right)}};
}

// ------------------------------------------------------------- generators

namespace {

constexpr std::uint64_t kGenFuel = 4000;

// Closed expression paired with its value.
std::pair<ExprPtr, ValuePtr> closed_with_value(gen::Rng& rng) {
    for (;;) {
        ExprPtr e = gen::terminating_expr(rng, 3);
        auto out = eval_expr(EvalConfig{{}, {}, e, kGenFuel});
        if (const auto* s = std::get_if<Success>(&out)) return {e, s->value};
    }
}

ExprPtr plus_x_y() {
    return ecall("plus", {evar("X"), evar("Y")});
}

}  // namespace

std::vector<EquivCase> gen_swap_binding_cases(std::uint64_t seed,
                                              std::size_t n) {
    gen::Rng rng(seed);
    std::vector<EquivCase> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto [e1, v1] = closed_with_value(rng);
        auto [e2, v2] = closed_with_value(rng);
        EquivCase c;
        c.name = "swap_binding[" + std::to_string(i) + "]";
        c.left = elet({"X"}, {e1}, elet({"Y"}, {e2}, plus_x_y()));
        c.right = elet({"X"}, {e2}, elet({"Y"}, {e1}, plus_x_y()));
        c.assumptions = {
            Assumption{e1, Environment{}, v1},
            Assumption{e1, insert_value(Environment{}, EnvKey{"X"}, v2), v1},
            Assumption{e2, Environment{}, v2},
            Assumption{e2, insert_value(Environment{}, EnvKey{"X"}, v1), v2},
        };
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EquivCase> gen_simultaneous_swap_cases(std::uint64_t seed,
                                                   std::size_t n) {
    gen::Rng rng(seed);
    std::vector<EquivCase> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto [e1, v1] = closed_with_value(rng);
        auto [e2, v2] = closed_with_value(rng);
        EquivCase c;
        c.name = "simultaneous_swap[" + std::to_string(i) + "]";
        c.left = elet({"X", "Y"}, {e1, e2}, plus_x_y());
        c.right = elet({"X", "Y"}, {e2, e1}, plus_x_y());
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<EquivCase> gen_fun_wrap_cases(std::uint64_t seed, std::size_t n) {
    gen::Rng rng(seed);
    std::vector<EquivCase> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto [e, v] = closed_with_value(rng);
        EquivCase c;
        c.name = "fun_wrap[" + std::to_string(i) + "]";
        c.left = e;
        c.right = elet({"X"}, {efun({}, e)}, eapply(evar("X"), {}));
        out.push_back(std::move(c));
    }
    return out;
}

// --------------------------------------------------------------- manifests

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ManifestFail {
    std::string message;
};

ExprPtr load_core(const std::filesystem::path& path) {
    auto text = read_file(path);
    if (!text) throw ManifestFail{"cannot read " + path.string()};
    auto r = parse_expr(*text);
    if (const auto* err = std::get_if<ParseError>(&r))
        throw ManifestFail{path.string() + ": " + describe(*err)};
    return std::get<ExprPtr>(r);
}

Environment parse_env_bindings(const std::string& text) {
    Environment env;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ManifestFail{"bad env binding '" + item + "'"};
        const std::string name = item.substr(0, eq);
        if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
            throw ManifestFail{"env binding needs a variable name: " + item};
        auto lit = parse_literal_text(item.substr(eq + 1));
        if (!lit)
            throw ManifestFail{"env binding values must be literals: " + item};
        env = insert_value(std::move(env), EnvKey{name}, vlit(*lit));
    }
    return env;
}

}  // namespace

std::variant<std::vector<EquivCase>, ManifestError> load_manifest(
    const std::string& path) {
    auto text = read_file(path);
    if (!text) return ManifestError{"cannot read " + path};
    const auto dir = std::filesystem::path(path).parent_path();

    std::vector<EquivCase> cases;
    std::istringstream in(*text);
    std::string line;
    int lineno = 0;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream fields(line);
            std::string name, left, right, extra;
            if (!(fields >> name)) continue;  // blank line
            if (!(fields >> left >> right))
                throw ManifestFail{"line " + std::to_string(lineno) +
                                   ": expected name, left and right paths"};
            EquivCase c;
            c.name = name;
            c.left = load_core(dir / left);
            c.right = load_core(dir / right);
            if (fields >> extra) {
                if (extra.rfind("env:", 0) != 0)
                    throw ManifestFail{"line " + std::to_string(lineno) +
                                       ": unknown field '" + extra + "'"};
                c.env = parse_env_bindings(extra.substr(4));
            }
            cases.push_back(std::move(c));
        }
    } catch (const ManifestFail& f) {
        return ManifestError{path + ": " + f.message};
    }
    return cases;
}

}  // namespace cerl
