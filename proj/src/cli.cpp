#include "nvcat/cli.hpp"

#include "nvcat/bounds.hpp"
#include "nvcat/errors.hpp"
#include "nvcat/forms.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace nvcat {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string input;
    std::string report;
    std::string field = "q";
    std::uint64_t seed = 0;
    int max_r = 4;
    int survivor_order = 4;
    bool json_output = false;
    std::string a;
    std::string b;

    BoundOptions options() const {
        BoundOptions o;
        o.field = Field::parse(field);
        o.seed = seed;
        o.max_r = max_r;
        o.survivor_order = survivor_order;
        if (!a.empty()) o.a = Scalar::parse(o.field, a);
        if (!b.empty()) o.b = Scalar::parse(o.field, b);
        return o;
    }
};

// Text form of a JSON document: one "key: value" line per member, nested objects indented.
void render(std::ostringstream& out, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render(out, value, indent + 1);
        } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const json& e) { return e.is_structured(); })) {
            out << pad << key << ":\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (value[i].is_object()) {
                    out << pad << "  - [" << i << "]\n";
                    render(out, value[i], indent + 2);
                } else {
                    out << pad << "  - " << value[i].dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << pad << key << ": " << value.dump() << "\n";
        }
    }
}

std::string emit(const json& j, bool as_json) {
    if (as_json) return j.dump(2) + "\n";
    std::ostringstream out;
    render(out, j, 0);
    return out.str();
}

Input read_input(const RunConfig& cfg) {
    Input in = load_input_file(cfg.input);
    auto report = validate_cocycle(in.complex, in.xi);
    if (!report.ok) {
        std::vector<std::string> details;
        for (const auto& t : report.violations) details.push_back("cocycle condition fails on triangle " + simplex_json(t).dump());
        throw ValidationError("xi is not a cocycle", details);
    }
    return in;
}

json validation_json(const Input& in) {
    auto report = validate_cocycle(in.complex, in.xi);
    json j = to_json(report);
    if (!report.ok) return j;
    std::int64_t g = periods(in.complex, in.xi);
    j["periods"] = g;
    j["lambda"] = g == 0 ? json(nullptr) : json(divisibility(in.complex, in.xi).lambda);
    return j;
}

std::string validation_text(const json& j) {
    std::ostringstream out;
    out << "ok: " << (j.at("ok").get<bool>() ? "true" : "false") << "\n";
    for (const auto& v : j.at("violations")) out << "violation: " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (j.contains("periods")) {
        out << "periods generator: " << j["periods"].get<std::int64_t>() << ", lambda: ";
        out << (j["lambda"].is_null() ? std::string("none") : std::to_string(j["lambda"].get<std::int64_t>())) << "\n";
    }
    return out.str();
}

void require_nonexact(const Input& in) {
    if (periods(in.complex, in.xi) == 0)
        throw ValidationError("xi is exact: the cover is trivial; use untwisted tooling (the bound command reports the classical estimate)");
}

json cover_json(const CoverAnalysis& c) {
    json degrees = json::array();
    for (const auto& d : c.homology.degrees()) degrees.push_back(to_json(d));
    return {{"lambda", c.lambda}, {"degrees", degrees}};
}

json supp_json(const CoverAnalysis& c) {
    json j = to_json(c.torsion);
    j["degrees"] = cover_json(c).at("degrees");
    return j;
}

json cohom_json(const Input& in, const RunConfig& cfg) {
    const Field f = Field::parse(cfg.field);
    Scalar a = Scalar::one(f);
    if (!cfg.a.empty()) {
        a = Scalar::parse(f, cfg.a);
        if (a.is_zero()) throw ValidationError("--a must be nonzero");
    } else if (periods(in.complex, in.xi) == 0) {
        a = pick_generic(std::vector<Scalar>{}, f, 1, cfg.seed).front();
    } else {
        a = pick_generic(analyze_cover(in.complex, in.xi, f).torsion, 1, cfg.seed).front();
    }
    return to_json(twisted_cohomology(in.complex, in.xi, a));
}

std::string bound_text(const json& r) {
    std::ostringstream out;
    out << "best bound: cat(X,xi) >= " << r.at("best_bound").get<int>() << "\n";
    for (const auto& b : r.at("bounds")) out << "bound: " << b.at("value").get<int>() << " (" << b.at("theorem").get<std::string>() << ")\n";
    for (const auto& rel : r.at("relations")) out << "relation: " << rel.get<std::string>() << "\n";
    out << "interpretation: " << r.at("interpretation").get<std::string>() << "\n";
    json rest = {{"version", r.at("version")}, {"xi_exact", r.at("xi_exact")}, {"context", r.at("context")}};
    render(out, rest, 0);
    json certs = json::array();
    for (const auto& b : r.at("bounds")) certs.push_back(b.at("certificate"));
    render(out, json{{"certificates", certs}}, 0);
    return out.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
}

CommandResult dispatch(const std::string& command, const RunConfig& cfg) {
    CommandResult res;
    if (command == "validate") {
        Input in = load_input_file(cfg.input);
        json j = validation_json(in);
        res.exit_code = j.at("ok").get<bool>() ? 0 : 2;
        res.output = cfg.json_output ? j.dump(2) + "\n" : validation_text(j);
        return res;
    }
    Input in = read_input(cfg);
    const BoundOptions opt = cfg.options();
    if (command == "cover") {
        require_nonexact(in);
        res.output = emit(cover_json(analyze_cover(in.complex, in.xi, opt.field)), cfg.json_output);
    } else if (command == "supp") {
        require_nonexact(in);
        res.output = emit(supp_json(analyze_cover(in.complex, in.xi, opt.field)), cfg.json_output);
    } else if (command == "cohom") {
        res.output = emit(cohom_json(in, cfg), cfg.json_output);
    } else if (command == "bound") {
        json r = to_json(compute_bounds(in.complex, in.xi, opt));
        res.output = cfg.json_output ? r.dump(2) + "\n" : bound_text(r);
    } else if (command == "report") {
        json j;
        j["validation"] = validation_json(in);
        if (periods(in.complex, in.xi) != 0) {
            auto c = analyze_cover(in.complex, in.xi, opt.field);
            j["cover"] = cover_json(c);
            j["supp"] = to_json(c.torsion);
        }
        j["cohomology"] = cohom_json(in, cfg);
        j["bound"] = to_json(compute_bounds(in.complex, in.xi, opt));
        res.output = emit(j, cfg.json_output);
    } else if (command == "replay") {
        json doc = read_json_file(cfg.report);
        if (doc.contains("bound") && doc["bound"].is_object()) doc = doc["bound"];
        auto verdicts = replay_report(in.complex, in.xi, doc);
        json list = json::array();
        bool all = true;
        for (const auto& v : verdicts) {
            list.push_back({{"theorem", v.theorem}, {"value", v.value}, {"ok", v.ok}, {"reason", v.reason}});
            all = all && v.ok;
        }
        res.exit_code = all ? 0 : 2;
        res.output = emit(json{{"ok", all}, {"verdicts", list}}, cfg.json_output);
    }
    return res;
}

json error_json(const std::string& message, const std::vector<std::string>& details) {
    return {{"ok", false}, {"error", message}, {"violations", details}};
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Lower bounds for the Lusternik-Schnirelmann category of a cohomology class"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool computing) {
        sub->add_option("input", cfg.input, "input complex (JSON)")->required();
        sub->add_flag("--json", cfg.json_output, "emit JSON");
        if (!computing) return;
        sub->add_option("--field", cfg.field, "coefficient field: q or fp:P")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for generic sampling")->capture_default_str();
        sub->add_option("--max-r", cfg.max_r, "largest number of extra factors searched")->capture_default_str();
        sub->add_option("--survivor-order", cfg.survivor_order, "Massey order through which survivors are checked")->capture_default_str();
        sub->add_option("--a", cfg.a, "twist value a (default: generic)");
        sub->add_option("--b", cfg.b, "twist value b (default: a^-1)");
    };
    add_common(app.add_subcommand("validate", "check the input and report periods"), false);
    add_common(app.add_subcommand("cover", "homology of the infinite cyclic cover"), true);
    add_common(app.add_subcommand("supp", "torsion and Supp of the cover homology"), true);
    add_common(app.add_subcommand("cohom", "twisted cohomology dimensions"), true);
    add_common(app.add_subcommand("bound", "certified lower bounds"), true);
    add_common(app.add_subcommand("report", "everything above in one document"), true);
    auto* replay = app.add_subcommand("replay", "re-verify the certificates of a bound report");
    add_common(replay, false);
    replay->add_option("report", cfg.report, "bound or full report (JSON)")->required();
    replay->add_option("--field", cfg.field, "ignored; the report records its field");

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    CommandResult res;
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.output = app.help();
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.error = std::string(e.what()) + "\n";
        return res;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (cfg.max_r < 0) throw ValidationError("--max-r must be non-negative");
        if (cfg.survivor_order < 1) throw ValidationError("--survivor-order must be at least 1");
        return dispatch(command, cfg);
    } catch (const ValidationError& e) {
        res.exit_code = 2;
        res.output = cfg.json_output ? error_json(e.what(), e.details()).dump(2) + "\n" : "";
        res.error = std::string("error: ") + e.what() + "\n";
        for (const auto& d : e.details()) res.error += "  " + d + "\n";
    } catch (const LimitError& e) {
        res.exit_code = 3;
        res.error = std::string("limit: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.error = std::string("internal error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace nvcat
