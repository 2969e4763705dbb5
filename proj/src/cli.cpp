#include "rrfilt/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrfilt/analyzer.hpp"
#include "rrfilt/oracle.hpp"

namespace rrfilt {

using ordered_json = nlohmann::ordered_json;

NormalizedIdeal ideal_from_rendering(SemigroupPtr s, std::int64_t min, std::int64_t conductor,
                                     const std::vector<std::int64_t>& members) {
    if (conductor < min) throw ValidationError("conductor below min");
    std::vector<char> bits(static_cast<std::size_t>(conductor - min), 0);
    for (std::int64_t z : members) {
        if (z < min || z >= conductor) throw ValidationError("member outside the window");
        bits[static_cast<std::size_t>(z - min)] = 1;
    }
    if (!bits.empty() && !bits.front()) throw ValidationError("min must be a member");
    return NormalizedIdeal::from_window(std::move(s), min, std::move(bits));
}

namespace {

struct Options {
    std::string instance_file;
    bool json = false;
    std::int64_t n_max = 0; // 0 = use the instance file or the default
    std::int64_t bound = 0;
    std::int64_t seed = 1;
    std::int64_t count = 100;
};

struct Instance {
    SemigroupPtr S;
    NormalizedIdeal I;   // instance ideal, default the maximal ideal
    NormalizedIdeal M;   // instance module, default the canonical ideal
    std::int64_t t = 1;
    std::int64_t n_max = 0;
    std::optional<std::int64_t> k;
};

std::vector<std::int64_t> int_list(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) throw ValidationError(what + " must be a list of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ValidationError(what + " must be a list of integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("instance file is not valid JSON: ") + ex.what());
    }
    if (!j.is_object()) throw ValidationError("instance file must hold a JSON object");
    static const std::vector<std::string> allowed = {"semigroup", "ideal", "module", "t", "n_max", "k"};
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
            throw ValidationError("unknown instance field: " + item.key());
    }
    if (!j.contains("semigroup")) throw ValidationError("instance file must name a semigroup");
    SemigroupPtr S = make_semigroup(int_list(j["semigroup"], "semigroup"));

    NormalizedIdeal I = j.contains("ideal")
                            ? NormalizedIdeal::from_generators(S, int_list(j["ideal"], "ideal"))
                            : NormalizedIdeal::maximal_ideal(S);

    NormalizedIdeal M = NormalizedIdeal::canonical_ideal(S);
    if (j.contains("module")) {
        const auto& m = j["module"];
        if (m.is_string()) {
            if (m.get<std::string>() != "canonical")
                throw ValidationError("module string must be \"canonical\"");
        } else if (m.is_object() && m.size() == 1 && m.contains("principal")) {
            if (!m["principal"].is_number_integer())
                throw ValidationError("module.principal must be an integer shift");
            M = shift(NormalizedIdeal::semigroup_ideal(S), m["principal"].get<std::int64_t>());
        } else if (m.is_object() && m.size() == 1 && m.contains("fractional")) {
            M = NormalizedIdeal::from_generators(S, int_list(m["fractional"], "module.fractional"));
        } else {
            throw ValidationError("module must be \"canonical\", {\"principal\": c} or {\"fractional\": [...]}");
        }
    }

    Instance inst{std::move(S), std::move(I), std::move(M), 1, 0, std::nullopt};
    if (j.contains("t")) {
        if (!j["t"].is_number_integer() || j["t"].get<std::int64_t>() < 1)
            throw ValidationError("t must be a positive integer");
        inst.t = j["t"].get<std::int64_t>();
    }
    if (j.contains("n_max")) {
        if (!j["n_max"].is_number_integer() || j["n_max"].get<std::int64_t>() < 1)
            throw ValidationError("n_max must be a positive integer");
        inst.n_max = j["n_max"].get<std::int64_t>();
    }
    if (j.contains("k")) {
        if (!j["k"].is_number_integer() || j["k"].get<std::int64_t>() < 0)
            throw ValidationError("k must be a nonnegative integer");
        inst.k = j["k"].get<std::int64_t>();
    }
    return inst;
}

ordered_json render_ideal(const NormalizedIdeal& e) {
    return ordered_json{{"min", e.min()}, {"conductor", e.conductor()}, {"members", e.window_members()}};
}

std::string render_ideal_text(const NormalizedIdeal& e) {
    std::ostringstream os;
    os << "{min=" << e.min() << ", conductor=" << e.conductor() << ", members=[";
    const auto mem = e.window_members();
    for (std::size_t j = 0; j < mem.size(); ++j) os << (j ? ", " : "") << mem[j];
    os << "]}";
    return os.str();
}

ordered_json semigroup_block(const NumericalSemigroup& s) {
    return ordered_json{{"generators", s.generators()},
                        {"multiplicity", s.multiplicity()},
                        {"frobenius", s.frobenius()},
                        {"gaps", s.gaps()}};
}

std::string polynomial_string(const std::vector<std::int64_t>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!first) os << " + ";
        if (k == 0) {
            os << coeffs[k];
        } else {
            if (coeffs[k] != 1) os << coeffs[k];
            os << "t";
            if (k >= 2) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void print_list(std::ostream& out, const std::vector<std::int64_t>& v) {
    out << "[";
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? ", " : "") << v[j];
    out << "]";
}

ordered_json verdict_json(const QuasiHilbertReport& rep) {
    ordered_json r;
    r["gorenstein"] = rep.gorenstein;
    r["depth_positive"] = rep.depth_positive;
    r["witness"] = rep.witness ? ordered_json{{"n", rep.witness->n}, {"element", rep.witness->element}}
                               : ordered_json(nullptr);
    r["v_min"] = rep.v_min;
    r["r_x"] = rep.r_x;
    r["e_series_tilde"] = rep.e_series_tilde;
    r["e_series_power"] = rep.e_series_power;
    r["stable_window"] = rep.stable_window;
    r["n_star"] = rep.n_star;
    r["eventual_length"] = rep.eventual_length;
    r["quasi_hilbert"] = rep.quasi_hilbert;
    r["hilbert_mod_x"] = rep.hilbert_mod_x;
    r["note"] = rep.note.empty() ? ordered_json(nullptr) : ordered_json(rep.note);
    return r;
}

void emit(std::ostream& out, const Options& opt, const NumericalSemigroup* s,
          ordered_json result, ordered_json diagnostics, const std::string& text) {
    if (opt.json) {
        ordered_json j;
        j["semigroup"] = s ? semigroup_block(*s) : ordered_json(nullptr);
        j["result"] = std::move(result);
        j["diagnostics"] = std::move(diagnostics);
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    if (command == "oracle-check") {
        oracle::SuiteOptions so;
        so.seed = static_cast<std::uint64_t>(opt.seed);
        so.count = opt.count;
        so.bound = opt.bound;
        const auto reports = oracle::compare_suite(so);
        bool all_agree = true, all_margins = true;
        std::size_t instances = 0;
        std::string last;
        ordered_json rj = ordered_json::array();
        std::ostringstream text;
        for (const auto& rep : reports) {
            if (rep.instance != last) {
                ++instances;
                last = rep.instance;
            }
            all_agree = all_agree && rep.agree;
            all_margins = all_margins && rep.margin_ok;
            rj.push_back(ordered_json{{"operation", rep.operation},
                                      {"instance", rep.instance},
                                      {"kernel", rep.kernel_value},
                                      {"oracle", rep.oracle_value},
                                      {"agree", rep.agree},
                                      {"margin_ok", rep.margin_ok}});
            text << (rep.agree ? "agree " : "DISAGREE ") << rep.operation << "  " << rep.instance << "\n";
        }
        text << "reports=" << reports.size() << " instances=" << instances
             << " all_agree=" << (all_agree ? "true" : "false") << "\n";
        emit(out, opt, nullptr,
             ordered_json{{"instances", instances},
                          {"all_agree", all_agree},
                          {"all_margins_ok", all_margins},
                          {"reports", std::move(rj)}},
             ordered_json{{"r_x", nullptr}, {"n_star", nullptr}}, text.str());
        return all_agree ? 0 : 1;
    }

    if (opt.instance_file.empty()) throw ValidationError("missing instance file (-i FILE)");
    Instance inst = load_instance(opt.instance_file);
    const NumericalSemigroup& S = *inst.S;
    const std::int64_t n_max_opt = opt.n_max > 0 ? opt.n_max : inst.n_max;

    if (command == "info") {
        std::ostringstream text;
        text << "S = <";
        const auto& gens = S.generators();
        for (std::size_t j = 0; j < gens.size(); ++j) text << (j ? "," : "") << gens[j];
        text << ">  e=" << S.multiplicity() << "  F=" << S.frobenius() << "  genus=" << S.genus()
             << "  symmetric=" << (S.is_symmetric() ? "true" : "false") << "\ngaps = ";
        print_list(text, S.gaps());
        text << "\napery(e) = ";
        print_list(text, S.apery_set(S.multiplicity()));
        text << "\n";
        emit(out, opt, &S,
             ordered_json{{"symmetric", S.is_symmetric()},
                          {"genus", S.genus()},
                          {"apery_mod_e", S.apery_set(S.multiplicity())}},
             ordered_json{{"r_x", reduction_index(NormalizedIdeal::maximal_ideal(inst.S)).r_x},
                          {"n_star", nullptr}},
             text.str());
        return 0;
    }

    if (command == "colon") {
        const ReductionIndex red = reduction_index(inst.I);
        const std::int64_t k = inst.k.value_or(red.r_x);
        const NormalizedIdeal lhs = product(power(inst.I, inst.t + k), inst.M);
        const NormalizedIdeal rhs = product(power(inst.I, k), inst.M);
        const NormalizedIdeal c = colon_in(lhs, rhs, NormalizedIdeal::semigroup_ideal(inst.S));
        std::ostringstream text;
        text << "(I^" << (inst.t + k) << " M : I^" << k << " M) in A = " << render_ideal_text(c)
             << "\nminimal generators = ";
        print_list(text, minimal_generators(c));
        text << "\n";
        emit(out, opt, &S,
             ordered_json{{"t", inst.t},
                          {"k", k},
                          {"ideal", render_ideal(c)},
                          {"minimal_generators", minimal_generators(c)}},
             ordered_json{{"r_x", red.r_x}, {"n_star", nullptr}}, text.str());
        return 0;
    }

    if (command == "rr") {
        const ReductionIndex red = reduction_index(inst.I);
        const NormalizedIdeal rr = rr_ideal(inst.I, inst.t, inst.M);
        const bool eq = rr == power(inst.I, inst.t);
        std::ostringstream text;
        text << "r(I^" << inst.t << ", M) = " << render_ideal_text(rr) << "\nminimal generators = ";
        print_list(text, minimal_generators(rr));
        text << "\nrr_equals_power = " << (eq ? "true" : "false") << "\n";
        emit(out, opt, &S,
             ordered_json{{"t", inst.t},
                          {"ideal", render_ideal(rr)},
                          {"minimal_generators", minimal_generators(rr)},
                          {"rr_equals_power", eq}},
             ordered_json{{"r_x", red.r_x}, {"n_star", nullptr}}, text.str());
        return 0;
    }

    if (command == "closure") {
        const ReductionIndex red = reduction_index(inst.I);
        const NormalizedIdeal cl = rr_closure(inst.I, inst.t);
        const NormalizedIdeal mcl = rr_module_closure(inst.I, inst.t, inst.M);
        const bool cl_eq = cl == power(inst.I, inst.t);
        const bool mcl_eq = mcl == product(power(inst.I, inst.t), inst.M);
        std::ostringstream text;
        text << "closure(I^" << inst.t << ") = " << render_ideal_text(cl)
             << "\nclosure_equals_power = " << (cl_eq ? "true" : "false")
             << "\nmodule_closure(I^" << inst.t << " M) = " << render_ideal_text(mcl)
             << "\nmodule_closure_equals_product = " << (mcl_eq ? "true" : "false") << "\n";
        emit(out, opt, &S,
             ordered_json{{"t", inst.t},
                          {"closure", render_ideal(cl)},
                          {"closure_equals_power", cl_eq},
                          {"module_closure", render_ideal(mcl)},
                          {"module_closure_equals_product", mcl_eq}},
             ordered_json{{"r_x", red.r_x}, {"n_star", nullptr}}, text.str());
        return 0;
    }

    if (command == "indices") {
        const RRIndices ix = indices(inst.I, inst.t, inst.M);
        std::ostringstream text;
        text << "v_min=" << ix.v_min << " r_x=" << ix.r_x << " s=" << ix.s << " rho=" << ix.rho
             << " s_star=" << ix.s_star << "\n";
        emit(out, opt, &S,
             ordered_json{{"v_min", ix.v_min},
                          {"r_x", ix.r_x},
                          {"s", ix.s},
                          {"rho", ix.rho},
                          {"s_star", ix.s_star}},
             ordered_json{{"r_x", ix.r_x}, {"n_star", nullptr}}, text.str());
        return 0;
    }

    if (command == "series") {
        const StableWindow win = stable_window(inst.S);
        const std::int64_t n_max = n_max_opt > 0 ? n_max_opt : 2 * win.r_x + 4;
        const auto series = e_series(inst.S, n_max);
        std::ostringstream text;
        text << "e_series_tilde = ";
        print_list(text, series.first);
        text << "\ne_series_power = ";
        print_list(text, series.second);
        text << "\nstable_window = ";
        print_list(text, win.members);
        text << "\nn_star = " << win.n_star << "  eventual_length = " << win.members.size() << "\n";
        emit(out, opt, &S,
             ordered_json{{"n_max", n_max},
                          {"e_series_tilde", series.first},
                          {"e_series_power", series.second},
                          {"stable_window", win.members},
                          {"n_star", win.n_star},
                          {"eventual_length", static_cast<std::int64_t>(win.members.size())}},
             ordered_json{{"r_x", win.r_x}, {"n_star", win.n_star}}, text.str());
        return 0;
    }

    if (command == "verdict") {
        const QuasiHilbertReport rep = verdict(inst.S, n_max_opt);
        std::ostringstream text;
        text << "gorenstein = " << (rep.gorenstein ? "true" : "false")
             << "\ndepth_positive (= unmixed, d=1) = " << (rep.depth_positive ? "true" : "false");
        if (rep.witness)
            text << "  [witness n=" << rep.witness->n << ", element=" << rep.witness->element << "]";
        text << "\nv_min=" << rep.v_min << " r_x=" << rep.r_x << "\ne_series_tilde = ";
        print_list(text, rep.e_series_tilde);
        text << "\ne_series_power = ";
        print_list(text, rep.e_series_power);
        text << "\nstable_window = ";
        print_list(text, rep.stable_window);
        text << "\nn_star = " << rep.n_star << "  eventual_length = " << rep.eventual_length
             << "\nquasi_hilbert = " << (rep.quasi_hilbert ? "true" : "false")
             << "\nhilbert_mod_x = " << polynomial_string(rep.hilbert_mod_x) << "\n";
        if (!rep.note.empty()) text << "note: " << rep.note << "\n";
        emit(out, opt, &S, verdict_json(rep),
             ordered_json{{"r_x", rep.r_x}, {"n_star", rep.n_star}}, text.str());
        return 0;
    }

    if (command == "hilbert") {
        const auto coeffs = hilbert_fn_mod_x(inst.S);
        emit(out, opt, &S,
             ordered_json{{"coefficients", coeffs}, {"polynomial", polynomial_string(coeffs)}},
             ordered_json{{"r_x", nullptr}, {"n_star", nullptr}},
             polynomial_string(coeffs) + "\n");
        return 0;
    }

    throw ValidationError("unknown command: " + command);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ratliff-Rush filtration kernel for numerical semigroup rings"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name : {"info", "colon", "rr", "closure", "indices", "series", "verdict",
                             "hilbert", "oracle-check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("-i,--instance", opt.instance_file, "instance JSON file");
        sub->add_flag("--json", opt.json, "emit the JSON report");
        sub->add_option("--n-max", opt.n_max, "series length override");
        sub->add_option("--bound", opt.bound, "oracle truncation bound override");
        sub->add_option("--seed", opt.seed, "oracle random seed");
        sub->add_option("--count", opt.count, "oracle report count");
        subs.push_back(sub);
    }

    std::vector<const char*> argv;
    argv.push_back("rr");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt, out);
    } catch (const GuardError& ex) {
        if (opt.json)
            out << ordered_json{{"error", {{"type", "guard"}, {"message", ex.what()}}}}.dump(2) << "\n";
        err << "guard: " << ex.what() << "\n";
        return 3;
    } catch (const ValidationError& ex) {
        if (opt.json)
            out << ordered_json{{"error", {{"type", "validation"}, {"message", ex.what()}}}}.dump(2) << "\n";
        err << "error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace rrfilt
