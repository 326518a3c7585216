#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperjac/parse.hpp"
#include "hyperjac/picard.hpp"
#include "records.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace hyperjac::cli {

namespace {

struct Common {
    std::optional<std::string> field;
    bool text = false;
    bool json = false;
    std::uint64_t seed = 1;
    int trials = 100;
    bool allow_small_p = false;
    std::string input = "-";
};

struct Stratum {
    int i = 0;
    int j = 0;
    int k = 0;
};

class VerificationFailed : public std::runtime_error {
public:
    VerificationFailed(Json report) : std::runtime_error("verification failed"), report_(std::move(report)) {}
    const Json& report() const { return report_; }

private:
    Json report_;
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw PreconditionError("cannot open " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

void session_check(const Common& opt, const Field& field, std::initializer_list<int> slots) {
    if (opt.allow_small_p) return;
    int top = 0;
    for (int s : slots) top = std::max(top, s);
    require_characteristic_above(field.base_field(), top);
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

const std::vector<std::string> kFormKeys = {"i", "j", "k", "a", "b", "c", "field"};

// ---------------------------------------------------------------- form commands

Json cmd_classify(const Json& rec, const Common& opt) {
    check_keys(rec, kFormKeys, {"i", "j", "k", "a", "b", "c"});
    Field field = record_field(rec, opt.field);
    FormRecord fr = read_form(rec, field);
    const Lbqf& l = fr.form;
    session_check(opt, field, {l.idx().slot_a(), l.idx().slot_b(), l.idx().slot_c()});
    Classification c = classify(l);
    Json out;
    out["command"] = "classify";
    out["messages"] = fr.messages;
    out.update(encode_form(l));
    out["g"] = l.g();
    out["n"] = l.n();
    out["disc"] = disc_form(l).to_string();
    out.update(encode_classification(c));
    out["in_Jbd"] = in_Jbd(l);
    if (c.reduced && c.line_bundle && !c.integral) {
        Bidegree d = bidegree(l);
        out["bidegree"] = {d.d1, d.d2};
        out["bound_satisfied"] = bidegree_bound_holds(d.d1, l.g(), l.n());
        out["caporaso"] = caporaso_check(d.d1, d.d2, l.g(), l.n());
    } else {
        out["bidegree"] = nullptr;
        out["bound_satisfied"] = nullptr;
        out["caporaso"] = nullptr;
    }
    return out;
}

Json cmd_cover(const Json& rec, const Common& opt) {
    check_keys(rec, {"g", "sigma", "field"}, {"g", "sigma"});
    Field field = record_field(rec, opt.field);
    int g = int_field(rec, "g");
    session_check(opt, field, {2 * g + 2});
    BinForm sigma = parse_form(string_field(rec, "sigma"), field, 2 * g + 2, "sigma");
    Cover x(g, sigma);
    CoverClassification c = classify_cover(x);
    Json out;
    out["command"] = "cover";
    out["g"] = g;
    out["field"] = field.name();
    out["sigma"] = sigma.to_string();
    out["reduced"] = c.reduced;
    out["integral"] = c.integral;
    out["smooth"] = c.smooth;
    out["etale"] = is_etale(x);
    out["ramification"] = sigma.is_zero() ? Json::array() : encode_ramification(ramification(x));
    return out;
}

Json cmd_bidegree(const Json& rec, const Common& opt) {
    check_keys(rec, kFormKeys, {"i", "j", "k", "a", "b", "c"});
    Field field = record_field(rec, opt.field);
    FormRecord fr = read_form(rec, field);
    const Lbqf& l = fr.form;
    session_check(opt, field, {l.idx().slot_a(), l.idx().slot_b(), l.idx().slot_c()});
    auto split = factor_if_reducible(l);
    if (!split) throw PreconditionError("the form is irreducible over " + field.name() + "; no bidegree");
    Bidegree d = bidegree(l);
    Json out;
    out["command"] = "bidegree";
    out["messages"] = fr.messages;
    out.update(encode_form(l));
    out["factors"] = {encode_factor(split->first), encode_factor(split->second)};
    out["d1"] = d.d1;
    out["d2"] = d.d2;
    out["bound"] = rational_text(mpq_class(l.n() - 2 * (l.g() + 1), 2));
    out["bound_satisfied"] = bidegree_bound_holds(d.d1, l.g(), l.n());
    out["in_Jbd"] = in_Jbd(l);
    out["caporaso"] = caporaso_check(d.d1, d.d2, l.g(), l.n());
    return out;
}

Json cmd_limit(const Json& rec, const Common& opt) {
    std::vector<std::string> keys = kFormKeys;
    keys.push_back("weights");
    check_keys(rec, keys, {"i", "j", "k", "a", "b", "c"});
    Field field = record_field(rec, opt.field);
    if (!field.is_laurent()) field = field.laurent();
    FormRecord fr = read_form(rec, field);
    const Lbqf& fam = fr.form;
    session_check(opt, field, {fam.idx().slot_a(), fam.idx().slot_b(), fam.idx().slot_c()});
    Json out;
    out["command"] = "limit";
    out["messages"] = fr.messages;
    out["family"] = encode_form(fam);
    out["family_disc"] = disc_form(fam).to_string();
    if (rec.contains("weights")) {
        const Json& w = rec.at("weights");
        if (!w.is_array() || w.size() != 3 || !std::all_of(w.begin(), w.end(), [](const Json& x) {
                return x.is_number_integer();
            }))
            throw ParseError("'weights' must be three integers [m1, m2, mL]", 0, 0, w.dump());
        Lbqf lim = weighted_specialize(fam, w[0].get<int>(), w[1].get<int>(), w[2].get<int>());
        out["weights"] = w;
        out["canonical"] = false;
        out["limit"] = encode_form(lim);
        out["classification"] = encode_classification(classify(lim));
        out["disc"] = disc_form(lim).to_string();
        return out;
    }
    LimitReport r = classify_limit(fam);
    out["v"] = r.v;
    out["canonical"] = true;
    out["limit"] = encode_form(r.limit);
    out["classification"] = encode_classification(r.classification);
    out["disc"] = r.disc.to_string();
    out["ramification"] = encode_ramification(r.ramification);
    out["bidegree"] = r.bidegree ? Json{r.bidegree->d1, r.bidegree->d2} : Json(nullptr);
    return out;
}

using FormCommand = Json (*)(const Json&, const Common&);

Json run_records(FormCommand fn, const Common& opt, std::istream& in) {
    Json input = parse_json_text(read_all(opt.input, in));
    if (!input.is_array()) return fn(input, opt);
    Json out = Json::array();
    for (const auto& rec : input) out.push_back(fn(rec, opt));
    return out;
}

// ---------------------------------------------------------------- parameter commands

Json encode_group(const AbGroupDesc& g) {
    Json j;
    j["group"] = g.to_string();
    j["free_rank"] = g.free_rank;
    j["torsion"] = g.torsion;
    return j;
}

Json encode_weights(const WeightReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["passed"] = r.passed;
    j["exponent"] = r.exponent;
    j["character_weight"] = r.character_weight;
    j["failures"] = r.failures;
    return j;
}

struct PicardArgs {
    std::string stack;
    std::optional<int> g, n, i, j, k;
    bool verify = false;
};

Json cmd_picard(const PicardArgs& a, const Common& opt) {
    StackId id = parse_stack_id(a.stack);
    PicParams p;
    Json params;
    auto need = [&](const std::optional<int>& v, const char* name) {
        if (!v) throw PreconditionError(std::string("stack ") + a.stack + " needs --" + name);
        params[name] = *v;
        return *v;
    };
    const bool stratum = id == StackId::q || id == StackId::q_sm || id == StackId::q_lb;
    const bool jacobian = id == StackId::jbd || id == StackId::jbd_lb || id == StackId::j;
    if (stratum) {
        p.i = need(a.i, "i");
        p.j = need(a.j, "j");
        p.k = need(a.k, "k");
        p.g = p.i + p.j + p.k - 1;
        p.n = 2 * p.i + 2 * p.j + p.k;
    } else {
        p.g = need(a.g, "g");
        if (jacobian) p.n = need(a.n, "n");
    }
    Json out;
    out["command"] = "picard";
    out["stack"] = stack_name(id);
    out["params"] = params;
    out.update(encode_group(pic(id, p)));
    if (a.verify) {
        Field field = opt.field ? Field::parse(*opt.field) : Field::prime(1009);
        WeightReport r = [&] {
            if (stratum) return discdisc_weight_verify({p.i, p.j, p.k}, opt.trials, field, opt.seed);
            if (jacobian) {
                int d = p.n - p.g - 1;
                int i = d >= 0 ? d / 2 : (d - 1) / 2;
                return discdisc_weight_verify({i, d - i, p.n - 2 * d}, opt.trials, field, opt.seed);
            }
            return disc_weight_verify(p.g, opt.trials, field, opt.seed);
        }();
        out["verification"] = encode_weights(r);
        if (!r.ok()) throw VerificationFailed(out);
    }
    return out;
}

Json encode_prediction(const GenericPrediction& p) {
    Json j;
    j["reduced"] = p.reduced;
    j["integral"] = p.integral;
    j["smooth"] = p.smooth;
    j["line_bundle"] = p.line_bundle;
    return j;
}

StratumIndex canonical_index(const Stratum& s, Json& out) {
    StratumIndex idx{s.i, s.j, s.k};
    Json msgs = Json::array();
    if (!idx.canonical()) {
        msgs.push_back("swapped to i <= j: " + idx.to_string() + " -> " + idx.swapped().to_string());
        idx = idx.swapped();
    }
    out["messages"] = msgs;
    return idx;
}

Json cmd_strata(const Stratum& s) {
    Json out;
    out["command"] = "strata";
    StratumIndex idx = canonical_index(s, out);
    out["i"] = idx.i;
    out["j"] = idx.j;
    out["k"] = idx.k;
    out["g"] = idx.genus();
    out["n"] = idx.degree();
    out["slots"] = {idx.slot_a(), idx.slot_b(), idx.slot_c()};
    StratumDims d = stratum_dims(idx);
    out["dim_v"] = d.dim_v;
    out["dim_group"] = d.dim_group;
    out["expected_dim_v"] = d.expected_dim_v ? Json(*d.expected_dim_v) : Json(nullptr);
    out["relative_codim_to_next"] = d.relative_codim_to_next ? Json(*d.relative_codim_to_next) : Json(nullptr);
    StratumIndex next{idx.i - 1, idx.j + 1, idx.k};
    out["specializes_to"] = next.to_string();
    out["in_Jbd"] = 2 * idx.i + idx.k >= 0;
    out["generic"] = encode_prediction(generic_stratum_table(idx));
    return out;
}

struct Range {
    int lo;
    int hi;
};

Range parse_range(const std::string& text, const char* name) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
        if (r.lo > r.hi || r.hi - r.lo > 200) throw std::invalid_argument("bad");
        return r;
    } catch (const std::logic_error&) {
        throw ParseError(std::string("--") + name + " expects lo:hi", 0, 0, text);
    }
}

struct TableArgs {
    std::string i = "-2:2", j = "-2:4", k = "-3:3";
    std::optional<int> g, n;
};

Json cmd_table(const TableArgs& a) {
    Range ri = parse_range(a.i, "i"), rj = parse_range(a.j, "j"), rk = parse_range(a.k, "k");
    Json rows = Json::array();
    for (int i = ri.lo; i <= ri.hi; ++i)
        for (int j = std::max(i, rj.lo); j <= rj.hi; ++j)
            for (int k = rk.lo; k <= rk.hi; ++k) {
                StratumIndex idx{i, j, k};
                if (a.g && idx.genus() != *a.g) continue;
                if (a.n && idx.degree() != *a.n) continue;
                GenericPrediction p = generic_stratum_table(idx);
                Json row;
                row["stratum"] = idx.to_string();
                row["g"] = idx.genus();
                row["n"] = idx.degree();
                row["reduced"] = p.reduced;
                row["integral"] = p.integral;
                row["smooth"] = p.smooth;
                row["line_bundle"] = p.line_bundle;
                row["in_Jbd"] = 2 * i + k >= 0;
                rows.push_back(row);
            }
    Json out;
    out["command"] = "table";
    out["rows"] = rows;
    return out;
}

Json cmd_locus(const Stratum& s, bool discdisc) {
    Json out;
    out["command"] = "locus-equations";
    StratumIndex idx = canonical_index(s, out);
    out["stratum"] = idx.to_string();
    LocusEquations eq = locus_equations(idx, discdisc);
    out["variables"] = eq.variables;
    Json d = Json::array();
    for (const auto& p : eq.d) d.push_back(p.to_string(eq.variables));
    out["d"] = d;
    std::vector<std::string> dnames;
    for (std::size_t l = 0; l < eq.d.size(); ++l) dnames.push_back("d" + std::to_string(l));
    out["discdisc_in_d"] = eq.discdisc_in_d ? Json(eq.discdisc_in_d->to_string(dnames)) : Json(nullptr);
    out["discdisc"] = eq.discdisc_in_coeffs ? Json(eq.discdisc_in_coeffs->to_string(eq.variables)) : Json(nullptr);
    return out;
}

Json cmd_verify(const std::vector<std::string>& suites, const Common& opt) {
    Field field = opt.field ? Field::parse(*opt.field) : Field::prime(101);
    if (field.is_laurent()) throw PreconditionError("verify runs over Q or F_p");
    Json results = Json::array();
    bool ok = true;
    for (const auto& name : suites.empty() ? suite_names() : suites) {
        SuiteResult r = run_suite(name, field, opt.trials, opt.seed);
        Json j;
        j["suite"] = r.name;
        j["trials"] = r.trials;
        j["passed"] = r.passed;
        j["ok"] = r.ok();
        j["failures"] = r.failures;
        results.push_back(j);
        ok = ok && r.ok();
    }
    Json out;
    out["command"] = "verify";
    out["field"] = field.name();
    out["seed"] = opt.seed;
    out["suites"] = results;
    out["ok"] = ok;
    if (!ok) throw VerificationFailed(out);
    return out;
}

// ---------------------------------------------------------------- output

void emit(std::ostream& out, const Json& report, const Common& opt) {
    if (opt.text) out << render_text(report);
    else out << report.dump(2) << "\n";
}

int emit_error(std::ostream& out, std::ostream& err, const Common& opt, int code, const std::string& kind,
               const std::string& message, Json extra = Json::object()) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    for (const auto& [k, v] : extra.items()) e[k] = v;
    if (opt.text) {
        err << "error (" << kind << "): " << message << "\n";
    } else {
        Json wrap;
        wrap["error"] = e;
        out << wrap.dump(2) << "\n";
    }
    return code;
}

void add_common(CLI::App* cmd, Common& opt, bool with_input) {
    cmd->add_option("--field", opt.field, "Q, F<p>, or either followed by ((e))");
    auto* text = cmd->add_flag("--text", opt.text, "aligned text output");
    auto* json = cmd->add_flag("--json", opt.json, "JSON output (default)");
    text->excludes(json);
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--trials", opt.trials, "trials for randomized checks")->check(CLI::Range(1, 1000000));
    if (with_input) {
        cmd->add_flag("--allow-small-p", opt.allow_small_p, "skip the p > 2*degree session check");
        cmd->add_option("input", opt.input, "input file, or - for stdin");
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear binary quadratic forms over P^1: classification, bidegrees, limits, Picard groups",
                 "hyperjac"};
    app.require_subcommand(1);
    Common opt;
    PicardArgs pic_args;
    Stratum stratum;
    TableArgs table_args;
    bool want_discdisc = false;
    std::vector<std::string> suites;

    std::map<std::string, FormCommand> form_cmds = {
        {"classify", cmd_classify}, {"cover", cmd_cover}, {"bidegree", cmd_bidegree}, {"limit", cmd_limit}};
    const std::map<std::string, std::string> form_help = {
        {"classify", "classify a form {i,j,k,a,b,c,field}"},
        {"cover", "classify a double cover {g,sigma,field}"},
        {"bidegree", "factor a reducible form and report its bidegree"},
        {"limit", "limit at e = 0 of a family over K((e)); optional weights [m1,m2,mL]"}};
    for (const auto& [name, help] : form_help) add_common(app.add_subcommand(name, help), opt, true);

    auto* picard = app.add_subcommand("picard", "Picard group of a stack");
    add_common(picard, opt, false);
    picard->add_option("--stack", pic_args.stack, "Hbar, Hbar_red, Hbar_int, Hur, Q, Q_sm, Q_lb, Jbd, Jbd_lb, J")
        ->required();
    picard->add_option("--g", pic_args.g, "genus");
    picard->add_option("--n", pic_args.n, "degree");
    picard->add_option("--i", pic_args.i);
    picard->add_option("--j", pic_args.j);
    picard->add_option("--k", pic_args.k);
    picard->add_flag("--verify", pic_args.verify, "check the character weights on random forms");

    auto* strata = app.add_subcommand("strata", "dimensions and generic behaviour of one stratum");
    add_common(strata, opt, false);
    auto* locus = app.add_subcommand("locus-equations", "coefficient equations of the degeneracy loci");
    add_common(locus, opt, false);
    for (auto* cmd : {strata, locus}) {
        cmd->add_option("--i", stratum.i)->required();
        cmd->add_option("--j", stratum.j)->required();
        cmd->add_option("--k", stratum.k)->required();
    }
    locus->add_flag("--discdisc", want_discdisc, "also emit disc(disc p) for small strata");

    auto* table = app.add_subcommand("table", "generic behaviour over a range of strata");
    add_common(table, opt, false);
    table->add_option("--i", table_args.i, "range lo:hi");
    table->add_option("--j", table_args.j, "range lo:hi");
    table->add_option("--k", table_args.k, "range lo:hi");
    table->add_option("--g", table_args.g, "keep strata of this genus");
    table->add_option("--n", table_args.n, "keep strata of this degree");

    auto* verify = app.add_subcommand("verify", "randomized self-checks");
    add_common(verify, opt, false);
    verify->add_option("--suite", suites, "suite names (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParse;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    try {
        Json report;
        if (auto it = form_cmds.find(name); it != form_cmds.end()) report = run_records(it->second, opt, in);
        else if (name == "picard") report = cmd_picard(pic_args, opt);
        else if (name == "strata") report = cmd_strata(stratum);
        else if (name == "table") report = cmd_table(table_args);
        else if (name == "locus-equations") report = cmd_locus(stratum, want_discdisc);
        else report = cmd_verify(suites, opt);
        emit(out, report, opt);
        return kOk;
    } catch (const VerificationFailed& e) {
        emit(out, e.report(), opt);
        return kVerification;
    } catch (const ParseError& e) {
        Json extra;
        extra["line"] = e.line();
        extra["column"] = e.column();
        extra["token"] = e.token();
        return emit_error(out, err, opt, kParse, "parse", e.what(), extra);
    } catch (const UnsupportedError& e) {
        return emit_error(out, err, opt, kPrecondition, "unsupported", e.what());
    } catch (const PreconditionError& e) {
        return emit_error(out, err, opt, kPrecondition, "precondition", e.what());
    } catch (const Json::exception& e) {
        return emit_error(out, err, opt, kParse, "parse", e.what());
    } catch (const std::exception& e) {
        return emit_error(out, err, opt, kInternal, "internal", e.what());
    }
}

}  // namespace hyperjac::cli
