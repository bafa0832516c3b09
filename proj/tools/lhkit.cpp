#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lhkit/bessel2_reference.hpp"
#include "lhkit/family.hpp"
#include "lhkit/odelh.hpp"
#include "lhkit/report.hpp"

#include <json.hpp>

namespace {

using namespace lhkit;

ParamMap parse_params(const std::string& spec) {
    ParamMap out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("params: expected key=value, got '" + item + "'");
        out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    }
    return out;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

Family make_family_checked(const std::string& name, const std::string& params_spec, int n_max,
                           const std::string& perturb) {
    const auto id = family_from_name(name);
    if (!id) throw std::invalid_argument("unknown family '" + name + "'");
    Family fam = Family::make(*id, parse_params(params_spec));
    fam.validate(n_max);
    if (!perturb.empty()) {
        PerturbTarget t;
        int index = 0;
        std::string what = perturb;
        const auto at = perturb.find('@');
        if (at != std::string::npos) {
            what = perturb.substr(0, at);
            index = std::stoi(perturb.substr(at + 1));
        }
        if (what == "phi") t = PerturbTarget::phi;
        else if (what == "psi") t = PerturbTarget::psi;
        else if (what == "B") t = PerturbTarget::B;
        else if (what == "C") t = PerturbTarget::C;
        else if (what == "D") t = PerturbTarget::D;
        else if (what == "beta") t = PerturbTarget::beta;
        else if (what == "gamma") t = PerturbTarget::gamma;
        else throw std::invalid_argument("unknown perturbation target '" + what + "'");
        fam = fam.perturbed(t, index);
    }
    return fam;
}

int cmd_verify(const std::string& family, const std::string& params_spec, int n_max,
               const std::string& check, const std::string& out_path, const std::string& format,
               const std::string& perturb) {
    const Family fam = make_family_checked(family, params_spec, n_max, perturb);
    VerificationReport rep;
    if (check == "all") {
        rep = run_all(fam, n_max);
    } else {
        const auto kind = check_from_name(check);
        if (!kind) throw std::invalid_argument("unknown check '" + check + "'");
        rep = run_selected(fam, {*kind}, n_max);
    }
    write_out(out_path, format == "json" ? to_json(rep) : to_text(rep));
    return rep.all_pass() ? 0 : 1;
}

std::string table_markdown(FamilyId id, const ParamMap& subst) {
    const TableRows rows = table_rows(id, subst);
    std::ostringstream os;
    os << "### " << rows.caption << "\n\n";
    os << "| row | content |\n|---|---|\n";
    os << "| regularity | " << rows.regularity << " |\n";
    for (const auto& r : rows.recurrence) os << "| recurrence | " << r << " |\n";
    for (const auto& r : rows.functional_equation) os << "| functional equation | " << r << " |\n";
    for (const auto& r : rows.structure) os << "| structure relation | " << r << " |\n";
    os << "\n";
    return os.str();
}

std::string table_csv(FamilyId id, const ParamMap& subst) {
    const TableRows rows = table_rows(id, subst);
    std::ostringstream os;
    auto line = [&os, id](const std::string& row, const std::string& content) {
        std::string quoted = content;
        size_t pos = 0;
        while ((pos = quoted.find('"', pos)) != std::string::npos) {
            quoted.replace(pos, 1, "\"\"");
            pos += 2;
        }
        os << family_name(id) << "," << row << ",\"" << quoted << "\"\n";
    };
    os << "family,row,content\n";
    line("caption", rows.caption);
    line("regularity", rows.regularity);
    for (const auto& r : rows.recurrence) line("recurrence", r);
    for (const auto& r : rows.functional_equation) line("functional-equation", r);
    for (const auto& r : rows.structure) line("structure", r);
    return os.str();
}

int cmd_tables(const std::string& format, const std::string& params_spec,
               const std::string& out_path) {
    const ParamMap subst = parse_params(params_spec);
    if (format == "markdown") {
        std::ostringstream os;
        for (FamilyId id : all_families()) os << table_markdown(id, subst);
        write_out(out_path, os.str());
        return 0;
    }
    // CSV: one file per table when an output prefix is given.
    if (out_path.empty()) {
        for (FamilyId id : all_families()) std::cout << table_csv(id, subst);
        return 0;
    }
    std::filesystem::create_directories(out_path);
    for (FamilyId id : all_families()) {
        std::ofstream f(std::filesystem::path(out_path) / (family_name(id) + ".csv"));
        if (!f) throw std::runtime_error("cannot write in " + out_path);
        f << table_csv(id, subst);
    }
    return 0;
}

nlohmann::json relation_json(const StructureRelation& rel) {
    auto poly = [](const Polynomial& p) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
        return coeffs;
    };
    nlohmann::json j;
    j["order"] = rel.order;
    j["n"] = rel.n;
    j["G0"] = poly(rel.G0);
    j["G1"] = poly(rel.G1);
    j["H"] = poly(rel.H);
    nlohmann::json m = nlohmann::json::array();
    for (const auto& p : rel.M) m.push_back(poly(p));
    j["M"] = std::move(m);
    return j;
}

int cmd_derive_ode(const std::string& family, const std::string& params_spec, int n,
                   const std::string& mode, bool compare_paper, const std::string& out_path) {
    const Family fam = make_family_checked(family, params_spec, n + 2, "");
    if (mode == "transcribe" && fam.id() != FamilyId::bessel2)
        throw std::invalid_argument("transcription data exists for bessel2 only");
    if (compare_paper && fam.id() != FamilyId::bessel2)
        throw std::invalid_argument("--compare-paper applies to bessel2 only");

    std::array<StructureRelation, 4> rels;
    if (mode == "transcribe") {
        rels = bessel2_relations(fam.param("alpha"), fam.param("lambda"), fam.param("rho"), n);
    } else {
        rels = {fit_relation(fam, n, 1).relation, fit_relation(fam, n, 2).relation,
                fit_relation(fam, n, 3).relation, fit_relation(fam, n, 4).relation};
    }
    const OdeCoefficients ode = assemble_ode(rels);
    const Polynomial residual = ode_residual(ode, fam, n);

    auto poly = [](const Polynomial& p) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
        return coeffs;
    };

    nlohmann::json j;
    j["family"] = fam.name();
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : fam.params()) params[k] = v.str();
    j["params"] = params;
    j["n"] = n;
    j["mode"] = mode;
    j["version"] = kToolVersion;
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& r : rels) rj.push_back(relation_json(r));
    j["relations"] = std::move(rj);
    j["ode"]["c"] = poly(ode.c);
    const char* names[5] = {"A", "B", "C", "D", "E"};
    for (int i = 0; i < 5; ++i) j["ode"][names[i]] = poly(ode.hat[i]);
    j["ode"]["residual"] = poly(residual);

    bool mismatch = !residual.is_zero();
    if (compare_paper) {
        const OdeCoefficients ref =
            bessel2_ode(fam.param("alpha"), fam.param("lambda"), fam.param("rho"), n);
        std::optional<Rational> scale;
        nlohmann::json cmp;
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            const auto s = proportionality(ode.hat[i], ref.hat[i]);
            cmp[names[i]] = s && (!scale || *s == *scale) ? "match" : "mismatch";
            if (!s || (scale && *s != *scale)) ok = false;
            if (s && !scale) scale = s;
        }
        const auto sc = proportionality(ode.c, ref.c);
        cmp["c"] = sc ? "match" : "mismatch";
        if (!sc) ok = false;
        if (scale) cmp["scale"] = scale->str();
        j["compare"] = std::move(cmp);
        mismatch = mismatch || !ok;
    }
    write_out(out_path, j.dump(2) + "\n");
    return mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for class-zero Laguerre-Hahn orthogonal polynomials"};
    app.require_subcommand(1);

    std::string family, params, check = "all", out, format = "text", perturb;
    int n_max = 10;

    auto* verify = app.add_subcommand("verify", "run identity suites against a family");
    verify->add_option("--family", family, "family id")->required();
    verify->add_option("--params", params, "comma-separated key=value rationals (p/q)");
    verify->add_option("--n-max", n_max, "largest index to verify");
    verify->add_option("--check", check,
                       "functional-eq|riccati|r4|cd-recurrence|system|class|window|section5|ode|all");
    verify->add_option("--out", out, "output path (stdout when omitted)");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--perturb", perturb,
                       "fault injection: add 1 to phi|psi|B|C|D|beta|gamma (optionally @n)");

    std::string t_format = "markdown", t_params, t_out;
    auto* tables = app.add_subcommand("tables", "regenerate the ten family tables");
    tables->add_option("--format", t_format)->check(CLI::IsMember({"markdown", "csv"}));
    tables->add_option("--params", t_params, "substitution map applied to the rows");
    tables->add_option("--out", t_out, "file (markdown) or directory (csv)");

    std::string d_family, d_params, d_mode = "fit", d_out;
    int d_n = 4;
    bool d_compare = false;
    auto* derive = app.add_subcommand("derive-ode",
                                      "derive the four structure relations and the fourth-order "
                                      "equation at fixed index");
    derive->add_option("--family", d_family)->required();
    derive->add_option("--params", d_params);
    derive->add_option("--n", d_n, "index n");
    derive->add_option("--mode", d_mode)->check(CLI::IsMember({"transcribe", "fit"}));
    derive->add_flag("--compare-paper", d_compare,
                     "compare against the reference coefficients (bessel2)");
    derive->add_option("--out", d_out);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(family, params, n_max, check, out, format, perturb);
        if (tables->parsed()) return cmd_tables(t_format, t_params, t_out);
        if (derive->parsed())
            return cmd_derive_ode(d_family, d_params, d_n, d_mode, d_compare, d_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const lhkit::RegularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
