// Command-line front end: parse, evaluate, trace, check and compare `.core`
// programs. See README.md for the file formats.

#include <CLI11.hpp>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cerl/checker.hpp"
#include "cerl/deriv_io.hpp"
#include "cerl/equiv.hpp"
#include "cerl/eval.hpp"
#include "cerl/parser.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

// "X=5,Y='ok'" with literal right-hand sides.
std::optional<cerl::Environment> parse_env_option(const std::string& text) {
    cerl::Environment env;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) return std::nullopt;
        const std::string name = item.substr(0, eq);
        if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0])))
            return std::nullopt;
        auto lit = cerl::parse_literal_text(item.substr(eq + 1));
        if (!lit) return std::nullopt;
        env = cerl::insert_value(std::move(env), cerl::EnvKey{name},
                                 cerl::vlit(*lit));
    }
    return env;
}

struct EvalArgs {
    std::string input;
    std::uint64_t fuel = cerl::kDefaultFuel;
    std::string env_text;
    std::string out_path;
};

int load_program(const EvalArgs& args, cerl::EvalConfig& cfg) {
    auto text = read_file(args.input);
    if (!text) {
        std::cerr << "cannot read " << args.input << "\n";
        return 1;
    }
    auto parsed = cerl::parse_expr(*text);
    if (const auto* err = std::get_if<cerl::ParseError>(&parsed)) {
        std::cerr << args.input << ": " << cerl::describe(*err) << "\n";
        return 1;
    }
    cfg.expr = std::get<cerl::ExprPtr>(parsed);
    cfg.fuel = args.fuel;
    if (!args.env_text.empty()) {
        auto env = parse_env_option(args.env_text);
        if (!env) {
            std::cerr << "bad --env value: " << args.env_text << "\n";
            return 1;
        }
        cfg.env = std::move(*env);
    }
    return 0;
}

// Reserve stack in proportion to the depth bound; pages commit lazily.
std::size_t stack_for(std::uint64_t fuel) {
    const std::size_t floor_bytes = std::size_t{256} << 20;
    const std::size_t cap_bytes = std::size_t{8} << 30;
    const std::size_t wanted = static_cast<std::size_t>(fuel) * 4096;
    return std::min(cap_bytes, std::max(floor_bytes, wanted));
}

int run_eval(const EvalArgs& args) {
    cerl::EvalConfig cfg;
    if (int rc = load_program(args, cfg)) return rc;
    auto outcome = cerl::eval_expr_stacked(cfg, stack_for(cfg.fuel));
    if (const auto* err = std::get_if<cerl::EvalError>(&outcome)) {
        std::cout << cerl::eval_error_name(*err) << "\n";
        std::cerr << cerl::describe(*err) << "\n";
        return 2;
    }
    std::cout << cerl::render_value(std::get<cerl::Success>(outcome).value)
              << "\n";
    return 0;
}

int run_trace(const EvalArgs& args) {
    cerl::EvalConfig cfg;
    if (int rc = load_program(args, cfg)) return rc;
    auto outcome = cerl::eval_expr_stacked(cfg, stack_for(cfg.fuel));
    if (const auto* err = std::get_if<cerl::EvalError>(&outcome)) {
        std::cout << cerl::eval_error_name(*err) << "\n";
        std::cerr << cerl::describe(*err) << "\n";
        return 2;
    }
    const auto& success = std::get<cerl::Success>(outcome);
    const std::string text =
        cerl::serialize_derivation(*success.derivation);
    if (args.out_path.empty()) {
        std::cout << text;
    } else {
        if (!write_file(args.out_path, text)) {
            std::cerr << "cannot write " << args.out_path << "\n";
            return 1;
        }
        std::cout << cerl::render_value(success.value) << "\n";
    }
    return 0;
}

int run_parse(const std::string& input) {
    auto text = read_file(input);
    if (!text) {
        std::cerr << "cannot read " << input << "\n";
        return 1;
    }
    auto parsed = cerl::parse_expr(*text);
    if (const auto* err = std::get_if<cerl::ParseError>(&parsed)) {
        std::cerr << input << ": " << cerl::describe(*err) << "\n";
        return 1;
    }
    std::cout << cerl::format_expr(std::get<cerl::ExprPtr>(parsed)) << "\n";
    return 0;
}

int run_check(const std::string& input) {
    auto text = read_file(input);
    if (!text) {
        std::cerr << "cannot read " << input << "\n";
        return 1;
    }
    auto loaded = cerl::parse_derivation(*text);
    if (const auto* err = std::get_if<cerl::DerivLoadError>(&loaded)) {
        std::cerr << input << ": " << err->message << "\n";
        return 1;
    }
    auto report = cerl::validate(*std::get<cerl::DerivPtr>(loaded));
    if (report.valid) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid\n";
    for (const auto& v : report.violations)
        std::cout << "  " << v.path << " rule " << v.rule << ": " << v.reason
                  << "\n";
    return 1;
}

int run_equiv(const std::string& manifest, std::uint64_t fuel) {
    auto loaded = cerl::load_manifest(manifest);
    if (const auto* err = std::get_if<cerl::ManifestError>(&loaded)) {
        std::cerr << err->message << "\n";
        return 1;
    }
    bool all_equivalent = true;
    for (const auto& c : std::get<std::vector<cerl::EquivCase>>(loaded)) {
        auto verdict = cerl::check_equiv(c, fuel);
        if (!verdict) {
            std::cout << c.name << "\tvacuous\n";
            all_equivalent = false;
            continue;
        }
        std::cout << c.name << "\t" << cerl::render_verdict(*verdict) << "\n";
        if (!std::holds_alternative<cerl::Equivalent>(*verdict))
            all_equivalent = false;
    }
    return all_equivalent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Core Erlang subset interpreter and derivation tools"};
    app.require_subcommand(1);

    EvalArgs args;
    std::string input;
    std::uint64_t fuel = cerl::kDefaultFuel;

    auto add_fuel = [&](CLI::App* cmd, std::uint64_t& target) {
        cmd->add_option("--fuel", target, "evaluation depth bound")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* parse_cmd = app.add_subcommand("parse", "parse and echo a program");
    parse_cmd->add_option("file", input, "source file (.core)")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a program");
    eval_cmd->add_option("file", args.input, "source file (.core)")->required();
    add_fuel(eval_cmd, args.fuel);
    eval_cmd->add_option("--env", args.env_text,
                         "initial bindings, e.g. X=5,Y='ok'");

    auto* trace_cmd = app.add_subcommand(
        "trace", "evaluate and emit the derivation tree");
    trace_cmd->add_option("file", args.input, "source file (.core)")
        ->required();
    add_fuel(trace_cmd, args.fuel);
    trace_cmd->add_option("--env", args.env_text,
                          "initial bindings, e.g. X=5,Y='ok'");
    trace_cmd->add_option("--out", args.out_path,
                          "derivation output path (stdout when omitted)");

    auto* check_cmd = app.add_subcommand(
        "check", "validate a serialized derivation (.deriv, '-' for stdin)");
    check_cmd->add_option("file", input, "derivation file")->required();

    auto* equiv_cmd =
        app.add_subcommand("equiv", "run an equivalence manifest");
    equiv_cmd->add_option("file", input, "manifest file")->required();
    add_fuel(equiv_cmd, fuel);

    CLI11_PARSE(app, argc, argv);

    if (parse_cmd->parsed()) return run_parse(input);
    if (eval_cmd->parsed()) return run_eval(args);
    if (trace_cmd->parsed()) return run_trace(args);
    if (check_cmd->parsed()) return run_check(input);
    return run_equiv(input, fuel);
}
