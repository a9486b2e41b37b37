// Command-line interface: root-datum dumps, Weyl group listings and dot
// actions, cohomology tables, determinant-lemma reports, twisted-algebra
// tables, and the theorem verification drivers.
//
// Exit codes for `verify`: 0 = all pass, 1 = some check failed,
// 2 = inconclusive (a window or hypothesis gate refused).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "chevalley/drivers.hpp"

using namespace chevalley;

namespace {

Weight parse_weight(const RootDatum& datum, const std::string& csv) {
    RatVec coords;
    std::string token;
    std::istringstream is(csv);
    while (std::getline(is, token, ',')) coords.push_back(parse_rat(token));
    if (static_cast<int>(coords.size()) != datum.rank)
        throw CLI::ValidationError("--chi needs " + std::to_string(datum.rank) + " coordinates");
    return Weight(std::move(coords));
}

void emit(const Json& j, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(json_path, std::ios::binary);
        out << j.dump(2) << "\n";
    }
}

std::string word_string(const WeylElement& w) {
    if (w.word.empty()) return "e";
    std::string s;
    for (int i : w.word) s += "s" + std::to_string(i);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chevalley: exact Lie-theoretic identities at desk scale"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    std::string type = "A1";
    std::string json_path;
    std::string chi_csv;
    DriverOptions opt;
    std::string kappa_str, level_str;
    bool tsv = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", type, "root datum type (A1, A2, B2, A3, G2)")->capture_default_str();
        cmd->add_option("--json", json_path, "write the JSON report to this file");
    };

    // rootdata
    auto* rootdata_cmd = app.add_subcommand("rootdata", "dump the root datum as JSON");
    add_common(rootdata_cmd);

    // weyl
    auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group operations");
    weyl_cmd->require_subcommand(1);
    auto* weyl_list = weyl_cmd->add_subcommand("list", "list W or a W_aff window");
    add_common(weyl_list);
    weyl_list->add_option("--height", opt.height, "affine window height (omit for finite W)")
        ->capture_default_str();
    bool affine = false;
    weyl_list->add_flag("--affine", affine, "list the affine window instead of W");
    weyl_list->add_flag("--tsv", tsv, "TSV output");

    auto* weyl_dot = weyl_cmd->add_subcommand("dot", "dot-orbit of chi over W or a window");
    add_common(weyl_dot);
    weyl_dot->add_option("--chi", chi_csv, "weight, fundamental-weight coordinates")->required();
    weyl_dot->add_option("--level", level_str, "affine level kappa-kappa_c (omit for finite dots)");
    weyl_dot->add_option("--height", opt.height)->capture_default_str();
    weyl_dot->add_flag("--tsv", tsv, "TSV output");

    auto* weyl_pred = weyl_cmd->add_subcommand("predicates", "sufficiently-negative predicates");
    add_common(weyl_pred);
    weyl_pred->add_option("--chi", chi_csv)->required();
    weyl_pred->add_option("--kappa", kappa_str, "level kappa (rational)")->required();
    weyl_pred->add_option("--height", opt.height, "window for the distinct-orbit scan")
        ->capture_default_str();

    // nilcoh
    auto* nilcoh_cmd = app.add_subcommand("nilcoh", "nilpotent-radical cohomology");
    nilcoh_cmd->require_subcommand(1);
    auto* nilcoh_table = nilcoh_cmd->add_subcommand("table", "H*(n, C) with weights");
    add_common(nilcoh_table);
    auto* nilcoh_verma = nilcoh_cmd->add_subcommand(
        "verma-check", "delta-module cohomology vs the closed form, all w");
    add_common(nilcoh_verma);
    nilcoh_verma->add_option("--chi", chi_csv, "twist chi (chi - 2rho dominant regular)");
    nilcoh_verma->add_option("--depth", opt.depth)->capture_default_str();

    // semidet
    auto* semidet_cmd = app.add_subcommand("semidet", "relative determinant calculus");
    semidet_cmd->require_subcommand(1);
    auto* semidet_verify = semidet_cmd->add_subcommand("verify", "determinant lemma over a window");
    add_common(semidet_verify);
    semidet_verify->add_option("--height", opt.height)->capture_default_str();
    semidet_verify->add_flag("--tsv", tsv, "TSV report");

    // hwa
    auto* hwa_cmd = app.add_subcommand("hwa", "twisted commutative algebras");
    hwa_cmd->require_subcommand(1);
    auto* hwa_table = hwa_cmd->add_subcommand("table", "multiplication table with signs");
    add_common(hwa_table);
    hwa_table->add_option("--level", level_str, "level kappa-kappa_c (integral)")->required();
    hwa_table->add_option("--window", opt.window_radius)->capture_default_str();

    // character utilities
    auto* char_cmd = app.add_subcommand("character", "character computations");
    char_cmd->require_subcommand(1);
    auto* char_weyl = char_cmd->add_subcommand("weyl", "irreducible character of V_chi");
    add_common(char_weyl);
    char_weyl->add_option("--chi", chi_csv)->required();
    char_weyl->add_flag("--tsv", tsv, "TSV output");
    auto* char_fock = char_cmd->add_subcommand("fock", "Fock module q-character");
    add_common(char_fock);
    char_fock->add_option("--chi", chi_csv, "highest weight alpha");
    char_fock->add_option("--qmax", opt.q_max)->capture_default_str();
    char_fock->add_flag("--tsv", tsv, "TSV output");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "theorem verification drivers");
    verify_cmd->require_subcommand(1);
    std::vector<CLI::App*> verify_subs;
    for (const char* name : {"det-lemma", "kostant", "deltahom", "fincoh2", "generalbrst",
                             "maintheorem", "hwa", "jacobi", "all"}) {
        auto* sub = verify_cmd->add_subcommand(name, std::string("verify ") + name);
        add_common(sub);
        sub->add_option("--kappa", kappa_str, "level kappa (rational; default kappa_c - 4)");
        sub->add_option("--chi", chi_csv, "twist weight where applicable");
        sub->add_option("--qmax", opt.q_max)->capture_default_str();
        sub->add_option("--height", opt.height)->capture_default_str();
        sub->add_option("--depth", opt.depth)->capture_default_str();
        sub->add_option("--grid-height", opt.grid_height)->capture_default_str();
        sub->add_option("--window", opt.window_radius)->capture_default_str();
        sub->add_option("--lambda-radius", opt.lambda_radius)->capture_default_str();
        sub->add_option("--chi-cutoff", opt.chi_cutoff)->capture_default_str();
        sub->add_option("--z-window", opt.z_window)->capture_default_str();
        verify_subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    try {
        opt.type = type;
        if (!kappa_str.empty()) opt.kappa = parse_rat(kappa_str);

        if (rootdata_cmd->parsed()) {
            emit(rootdatum_to_json(build_root_datum(type)), json_path);
            return 0;
        }

        if (weyl_list->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            if (tsv) {
                std::cout << "word\tlength\n";
                if (!affine) {
                    for (const auto& w : g.elements)
                        std::cout << word_string(w) << "\t" << w.length() << "\n";
                } else {
                    std::cout.flush();
                    std::cout << "lambda\tword\tht\n";
                    for (const auto& w : enumerate_Waff_window(g, opt.height))
                        std::cout << w.translation.str() << "\t" << word_string(w.finite) << "\t"
                                  << to_string(w.translation_height(datum)) << "\n";
                }
                return 0;
            }
            Json j;
            j["type"] = type;
            Json list = Json::array();
            if (!affine) {
                for (const auto& w : g.elements) {
                    Json e;
                    e["word"] = word_string(w);
                    e["length"] = w.length();
                    list.push_back(e);
                }
            } else {
                for (const auto& w : enumerate_Waff_window(g, opt.height)) {
                    Json e;
                    e["lambda"] = coweight_to_json(w.translation);
                    e["word"] = word_string(w.finite);
                    e["ht"] = to_string(w.translation_height(datum));
                    list.push_back(e);
                }
            }
            j["elements"] = list;
            emit(j, json_path);
            return 0;
        }

        if (weyl_dot->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            Weight chi = parse_weight(datum, chi_csv);
            Json j;
            j["type"] = type;
            j["chi"] = weight_to_json(chi);
            Json list = Json::array();
            if (level_str.empty()) {
                for (const auto& w : g.elements) {
                    Json e;
                    e["word"] = word_string(w);
                    e["dot"] = weight_to_json(dot_finite(datum, w, chi));
                    list.push_back(e);
                    if (tsv)
                        std::cout << word_string(w) << "\t" << dot_finite(datum, w, chi).str()
                                  << "\n";
                }
            } else {
                Level level(parse_rat(level_str));
                j["level"] = level_str;
                for (const auto& w : enumerate_Waff_window(g, opt.height)) {
                    Json e;
                    e["lambda"] = coweight_to_json(w.translation);
                    e["word"] = word_string(w.finite);
                    e["dot"] = weight_to_json(dot_affine(datum, w, chi, level));
                    list.push_back(e);
                    if (tsv)
                        std::cout << w.translation.str() << "\t" << word_string(w.finite) << "\t"
                                  << dot_affine(datum, w, chi, level).str() << "\n";
                }
            }
            if (!tsv) {
                j["orbit"] = list;
                emit(j, json_path);
            }
            return 0;
        }

        if (weyl_pred->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            Weight chi = parse_weight(datum, chi_csv);
            Rat kappa = parse_rat(kappa_str);
            auto p = level_predicates(datum, g, chi, kappa);
            Json j;
            j["type"] = type;
            j["chi"] = weight_to_json(chi);
            j["kappa"] = kappa_str;
            j["kappa_integral"] = is_integer(kappa);
            j["irreducible"] = p.irreducible;
            j["orbit_free"] = p.orbit_free;
            j["sufficient"] = p.sufficient;
            j["distinct_dot_orbit"] =
                distinct_dot_orbit(datum, g, chi, Level(kappa - critical_level(datum)), opt.height);
            j["window_height"] = opt.height;
            emit(j, json_path);
            return 0;
        }

        if (nilcoh_table->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            auto coh = cohomology_trivial(datum, g);
            Json j;
            j["type"] = type;
            Json rows = Json::array();
            for (const auto& [k, v] : coh.table.dims) {
                Json r;
                r["degree"] = k.first;
                r["weight_coords"] = weight_to_json(k.second);
                r["dim"] = to_string(v);
                rows.push_back(r);
            }
            j["table"] = rows;
            emit(j, json_path);
            return 0;
        }

        if (nilcoh_verma->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            Weight chi = chi_csv.empty() ? 3 * datum.rho : parse_weight(datum, chi_csv);
            Json j;
            j["type"] = type;
            j["chi"] = weight_to_json(chi);
            j["depth"] = opt.depth;
            Json rows = Json::array();
            bool all_ok = true;
            for (const auto& w : g.elements) {
                auto mod = build_semi_induced(datum, g, w, w.apply(-chi), opt.depth);
                auto table =
                    cohomology_with_coefficients(mod, g, CoefficientComplexKind::cohomology);
                Weight predicted = dot_finite(datum, w, -chi);
                bool trusted = table.trusted(predicted);
                bool ok = trusted && table.dim(w.length(), predicted) == 1;
                Int extra = 0;
                for (const auto& [k, v] : table.dims)
                    if (table.trusted(k.second)) extra += v;
                ok = ok && extra == 1;
                Json r;
                r["word"] = word_string(w);
                r["predicted_degree"] = w.length();
                r["predicted_weight"] = weight_to_json(predicted);
                r["status"] = trusted ? (ok ? "pass" : "fail") : "inconclusive";
                rows.push_back(r);
                all_ok = all_ok && ok;
            }
            j["rows"] = rows;
            j["status"] = all_ok ? "pass" : "fail";
            emit(j, json_path);
            return all_ok ? 0 : 1;
        }

        if (semidet_verify->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            if (tsv) {
                auto result = verify_det_lemma(datum, g, opt.height);
                std::cout << "lambda\tword\tpredicted\tenumerated\tpass\n";
                for (const auto& row : result.rows)
                    std::cout << row.w.translation.str() << "\t" << word_string(row.w.finite)
                              << "\t(" << row.predicted_weight.str() << ","
                              << to_string(row.predicted_dim) << ")\t(" << row.enumerated_weight.str()
                              << "," << to_string(row.enumerated_dim) << ")\t"
                              << (row.pass ? "pass" : "FAIL") << "\n";
                return result.ok ? 0 : 1;
            }
            auto rep = verify_det_lemma_report(datum, g, opt.height);
            emit(rep.to_json(), json_path);
            return rep.exit_code();
        }

        if (hwa_table->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            Rat level = parse_rat(level_str);
            auto coh = cohomology_trivial(datum, g);
            TwistedAlgebra lat = lattice_hwa(datum, level, opt.window_radius);
            TwistedAlgebra chw = cohomology_hwa(datum, level, coh);
            TwistedAlgebra full = twisted_tensor(lat, chw, natural_cross_pairing(datum));
            Json j;
            j["type"] = type;
            j["level"] = level_str;
            j["name"] = full.name;
            Json comps = Json::array();
            for (int i = 0; i < full.size(); ++i) {
                Json c;
                Json pt = Json::array();
                for (const auto& v : full.points[i]) pt.push_back(to_string(v));
                c["point"] = pt;
                c["parity"] = full.parity_of[i];
                c["basis"] = full.component_basis[i][0];
                comps.push_back(c);
            }
            j["components"] = comps;
            Json table = Json::array();
            for (int i = 0; i < full.size(); ++i)
                for (int k = 0; k < full.size(); ++k) {
                    const auto& e = full.mult[i][k];
                    if (e.coeff == 0) continue;
                    Json r;
                    r["i"] = i;
                    r["j"] = k;
                    r["coeff"] = to_string(e.coeff);
                    r["target"] = e.target;
                    table.push_back(r);
                }
            j["products"] = table;
            emit(j, json_path);
            return 0;
        }

        if (char_weyl->parsed()) {
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            auto ch = weyl_character(datum, g, parse_weight(datum, chi_csv));
            if (tsv)
                std::cout << character_to_tsv(ch);
            else
                emit(character_to_json(ch), json_path);
            return 0;
        }
        if (char_fock->parsed()) {
            RootDatum datum = build_root_datum(type);
            Weight alpha = chi_csv.empty() ? Weight::zero(datum.rank) : parse_weight(datum, chi_csv);
            auto ch = fock_character(datum, alpha, opt.q_max);
            if (tsv)
                std::cout << character_to_tsv(ch);
            else
                emit(character_to_json(ch), json_path);
            return 0;
        }

        // verify subcommands
        for (std::size_t i = 0; i < verify_subs.size(); ++i) {
            if (!verify_subs[i]->parsed()) continue;
            RootDatum datum = build_root_datum(type);
            WeylGroup g = enumerate_W(datum);
            Rat kappa = opt.kappa_for(datum);
            ReductionCutoffs cut{opt.lambda_radius, opt.q_max};
            std::string name = verify_subs[i]->get_name();
            VerificationReport rep;
            if (name == "det-lemma") {
                rep = verify_det_lemma_report(datum, g, opt.height);
            } else if (name == "kostant") {
                rep = verify_kostant_report(datum, g);
            } else if (name == "deltahom") {
                rep = verify_deltahom_report(datum, g, opt.depth, opt.grid_height);
            } else if (name == "fincoh2") {
                rep = verify_fincoh2_report(datum, g, opt.depth, opt.grid_height);
            } else if (name == "generalbrst") {
                rep = verify_generalbrst_report(datum, g, kappa, cut, opt.chi_cutoff);
            } else if (name == "maintheorem") {
                rep = verify_maintheorem_report(datum, g, kappa, cut, opt.chi_cutoff,
                                                opt.window_radius);
            } else if (name == "hwa") {
                rep = verify_hwa_report(datum, g, kappa, opt.window_radius);
            } else if (name == "jacobi") {
                rep = verify_jacobi_report(opt.q_max, opt.z_window);
            } else {  // all
                auto agg = verify_all(opt);
                emit(agg.to_json(), json_path);
                for (const auto& r : agg.reports)
                    std::cerr << status_name(r.status) << "\t" << r.theorem << "\n";
                return agg.exit_code();
            }
            emit(rep.to_json(), json_path);
            return rep.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
