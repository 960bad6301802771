#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quiverweyl/fixtures.hpp"
#include "quiverweyl/io.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw qw::ParseError("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

qw::Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return qw::Rational(boost::multiprecision::cpp_int(text));
        return qw::Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                            boost::multiprecision::cpp_int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw qw::ParseError("malformed rational value: " + text);
    }
}

qw::Params parse_params(const std::string& text) {
    qw::Params params;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw qw::ParseError("parameter must be key=value: " + item);
        params[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
    }
    return params;
}

void write_dot_files(const qw::AnalysisReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    int index = 0;
    for (const auto& component : report.components)
        for (const auto& leaf : component.leaves) {
            ++index;
            std::ofstream out(dir + "/leaf-" + std::to_string(index) + ".dot");
            if (!out) throw std::runtime_error("cannot write DOT file in " + dir);
            out << qw::export_dot(leaf.iso.local);
        }
}

struct Options {
    std::string input;
    std::string format = "text";
    std::string dot_dir;
    bool oracle = false;
    int max_weight = 24;
    unsigned seed = 0;
};

int run_pipeline(const std::string& command, const Options& opt) {
    qw::QuiverSetting setting = qw::parse_setting(read_input(opt.input));
    qw::RootEngine engine(setting, opt.max_weight);
    const bool json_out = opt.format == "json";

    if (command == "roots" || command == "sigma") {
        auto roots = engine.roots_below(setting.alpha);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : roots) {
            if (command == "sigma" && !engine.in_sigma00(r.vec)) continue;
            if (opt.oracle && command == "sigma" &&
                engine.in_sigma00(r.vec) != engine.in_sigma00_naive(r.vec))
                throw qw::InternalInconsistency("sigma enumeration oracle mismatch");
            if (json_out)
                arr.push_back({{"root", qw::detail::vec_to_json(r.vec, setting.quiver.vertices)},
                               {"kind", qw::detail::kind_name(r.kind)},
                               {"p", r.p}});
            else
                std::cout << qw::detail::vec_to_string(r.vec) << " "
                          << qw::detail::kind_name(r.kind) << " p=" << r.p << "\n";
        }
        if (json_out) std::cout << arr.dump(2) << "\n";
        return 0;
    }

    qw::AnalysisReport report = qw::analyze(setting, opt.max_weight, opt.oracle);
    if (!opt.dot_dir.empty()) write_dot_files(report, opt.dot_dir);

    if (command == "canonical") {
        if (json_out) {
            std::cout << qw::report_to_json(report, setting)["canonical"].dump(2) << "\n";
        } else {
            for (const auto& t : report.canonical.terms)
                std::cout << t.multiplicity << "*" << qw::detail::vec_to_string(t.root.vec)
                          << " " << qw::detail::kind_name(t.root.kind) << " p=" << t.root.p
                          << "\n";
        }
        return 0;
    }
    if (command == "leaves") {
        if (json_out) {
            std::cout << qw::report_to_json(report, setting)["components"].dump(2) << "\n";
        } else {
            std::cout << qw::render_report_text(report, setting);
        }
        return 0;
    }
    if (command == "weyl") {
        if (json_out)
            std::cout << qw::report_to_json(report, setting)["weyl"].dump(2) << "\n";
        else
            std::cout << "W = " << report.total.name() << ", order " << report.total.order()
                      << "\n";
        return 0;
    }
    // analyze
    if (json_out)
        std::cout << qw::report_to_json(report, setting).dump(2) << "\n";
    else
        std::cout << qw::render_report_text(report, setting);
    return 0;
}

int run_check_rep(const std::string& fixture_name, const std::string& params_text,
                  const Options& opt) {
    qw::Fixture fixture = qw::make_fixture(fixture_name, parse_params(params_text));
    fixture.rep.validate(fixture.doubled);
    bool vanishes = qw::moment_map_vanishes(fixture.doubled, fixture.rep);
    auto socle = qw::socle_dims(fixture.doubled, fixture.rep);
    nlohmann::json out;
    out["fixture"] = fixture.name;
    out["dimension"] = fixture.rep.dims;
    out["moment_map_zero"] = vanishes;
    out["socle"] = socle;
    out["theta_pairing"] = qw::theta_pairing(fixture.theta, fixture.rep.dims);
    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "fixture: " << fixture.name << "\n";
        std::cout << "moment map: " << (vanishes ? "vanishes" : "NONZERO") << "\n";
        std::cout << "socle dims:";
        for (int d : socle) std::cout << " " << d;
        std::cout << "\n";
    }
    return vanishes ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Namikawa-Weyl group computation for quiver varieties"};
    app.require_subcommand(1);

    Options opt;
    std::string fixture_name;
    std::string params_text;

    auto add_common = [&](CLI::App* sub, bool wants_input) {
        if (wants_input)
            sub->add_option("input", opt.input, "JSON input file ('-' or omitted for stdin)");
        sub->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--dot", opt.dot_dir, "Directory for per-leaf DOT files");
        sub->add_flag("--oracle", opt.oracle, "Enable brute-force cross-checks");
        sub->add_option("--max-weight", opt.max_weight, "Enumeration weight cap");
        sub->add_option("--seed", opt.seed, "Random seed for property checks");
    };

    for (const char* name : {"analyze", "roots", "sigma", "canonical", "leaves", "weyl"})
        add_common(app.add_subcommand(name), true);
    auto* check = app.add_subcommand("check-rep", "Evaluate a named representation fixture");
    check->add_option("--fixture", fixture_name, "Fixture name")->required();
    check->add_option("--params", params_text, "Comma-separated key=value rational parameters");
    add_common(check, false);

    CLI11_PARSE(app, argc, argv);

    try {
        std::string command = app.get_subcommands().front()->get_name();
        if (command == "check-rep") return run_check_rep(fixture_name, params_text, opt);
        return run_pipeline(command, opt);
    } catch (const qw::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::Invalid);
    } catch (const qw::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::Invalid);
    } catch (const qw::EmptyVarietyError& e) {
        std::cerr << "empty variety: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::EmptyVariety);
    } catch (const qw::MethodNotApplicableError& e) {
        std::cerr << "method not applicable: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::MethodNotApplicable);
    } catch (const qw::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::InternalInconsistency);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(qw::ExitCode::Failure);
    }
}
