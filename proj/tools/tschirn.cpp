/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tschirn/fields.hpp"
#include "tschirn/invariants.hpp"
#include "tschirn/io.hpp"
#include "tschirn/rnc.hpp"
#include "tschirn/suites.hpp"

namespace {

using namespace tschirn;

struct Options {
    long long characteristic = 0;
    uint64_t seed = 1;
    bool json = false;

    std::string model_file;
    std::string degrees;
    int d = 0;
    std::string p;
    std::string bundle_file;
    std::string point;
    std::vector<std::string> vectors;
    int trials = -1;
    std::string a_list;
    std::string b_list;
    int a1 = 0, a2 = 0;
    bool construct = false;
    int attempts = 100;
    int g = 0, g_y = 0;
    std::string type_list;
    int rank = 0, degree = 0, gap = 0;
    std::string suite;
    std::string output;
};

template <class K>
struct field_tag {
    using type = K;
};

/* choose the coefficient field once, from --char */
template <class Fn>
int with_field(long long characteristic, Fn&& fn) {
    if (characteristic == 0) return fn(field_tag<Rational>{});
    Fp::set_modulus(characteristic);
    return fn(field_tag<Fp>{});
}

void emit(const Json& data, bool as_json, std::ostream& os) {
    if (as_json)
        os << data.dump(2) << "\n";
    else
        os << render_text(data);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot read file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        while (used < item.size() && (item[used] == ' ')) ++used;
        if (used != item.size()) throw std::domain_error("bad integer list entry \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

template <class K>
std::vector<K> parse_scalar_list(const std::string& text) {
    std::vector<K> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar<K>(item));
    if (out.empty()) throw std::domain_error("empty scalar list");
    return out;
}

int run_scrollar(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        ParsedModel<K> model = parse_model<K>(slurp(opt.model_file));
        Json out;
        if (const BiPoly<K>* f = std::get_if<BiPoly<K>>(&model)) {
            CoverAlgebra<K> cov = from_plane_model(*f);
            TschirnhausenResult<K> res = tschirnhausen(cov);
            out = Json{{"model", bipoly_str(*f)}, {"d", cov.degree}};
            out.update(type_to_json(res.type));
        } else if (const CoverAlgebra<K>* cov = std::get_if<CoverAlgebra<K>>(&model)) {
            TschirnhausenResult<K> res = tschirnhausen(*cov);
            out = Json{{"provenance", cov->provenance}, {"d", cov->degree}};
            out.update(type_to_json(res.type));
        } else {
            const BundleLattice<K>& b = std::get<BundleLattice<K>>(model);
            out = type_to_json(splitting_type(b));
        }
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_pinch(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        TowerResult<K> tower = build_tower<K>(parse_int_list(opt.degrees));
        Json points = Json::array();
        for (const K& q : tower.points_used) points.push_back(scalar_str(q));
        Json out{{"degrees", parse_int_list(opt.degrees)},
                 {"type", type_to_json(tschirnhausen(tower.cover).type)},
                 {"degree_trace", tower.degree_trace},
                 {"points", std::move(points)},
                 {"cover", cover_to_json(tower.cover)}};
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_kummer(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        CoverAlgebra<K> cov = kummer_cover<K>(opt.d, parse_poly<K>(opt.p));
        BranchGenus bg = branch_and_genus(cov);
        Json out{{"d", opt.d},
                 {"p", opt.p},
                 {"type", type_to_json(tschirnhausen(cov).type)},
                 {"branch_degree", bg.branch_degree},
                 {"p_a", bg.p_a}};
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_inflate(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        BundleLattice<K> b = bundle_from_json<K>(Json::parse(slurp(opt.bundle_file)));
        InflationDatum<K> q;
        q.point = parse_scalar<K>(opt.point);
        for (const std::string& v : opt.vectors) {
            std::vector<K> row = parse_scalar_list<K>(v);
            if (static_cast<int>(row.size()) != b.rank)
                throw std::domain_error("fiber vector length does not match rank");
            q.vectors.push_back(std::move(row));
        }
        if (q.vectors.empty()) throw std::domain_error("need at least one --vectors row");
        InflationPrediction pred = predicted_inflation(b, q);
        BundleLattice<K> after = inflate(b, q);
        Json out{{"before", type_to_json(splitting_type(b))},
                 {"predicted", Json{{"h0", pred.h0}, {"h1", pred.h1}, {"rank_qv", pred.rank_qv}}},
                 {"after", type_to_json(splitting_type(after))},
                 {"bundle", bundle_to_json(after)}};
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_lingen(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        const int trials = opt.trials > 0 ? opt.trials : 4 * opt.d * (opt.d - 1);
        LingenRankResult r = lingen_rank<K>(opt.d, trials, opt.seed);
        Json out{{"d", opt.d}, {"rank", r.rank}, {"full", r.conclusive}};
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_rnc(const Options& opt) {
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        RncData<K> data{parse_scalar_list<K>(opt.a_list), parse_scalar_list<K>(opt.b_list)};
        RncParametrization<K> par = rnc_parametrize(data);
        Json comps = Json::array();
        for (const Poly<K>& c : par.components) comps.push_back(poly_str(c));
        Json out{{"components", std::move(comps)},
                 {"g", poly_str(par.g)},
                 {"report", Json{{"coordinate_points_hit", par.report.coordinate_points_hit},
                                 {"g_squarefree", par.report.g_squarefree},
                                 {"g_degree", par.report.g_degree},
                                 {"infinity_on_hyperplane", par.report.infinity_on_hyperplane},
                                 {"infinity_multiplicity", par.report.infinity_multiplicity},
                                 {"transverse", par.report.transverse}}}};
        emit(out, opt.json, std::cout);
        return 0;
    });
}

int run_miranda(const Options& opt) {
    const bool realizable = miranda_realizable(opt.a1, opt.a2);
    Json out{{"a1", opt.a1}, {"a2", opt.a2}, {"realizable", realizable}};
    if (!opt.construct) {
        emit(out, opt.json, std::cout);
        return 0;
    }
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        try {
            MirandaWitness<K> w = miranda_construct<K>(opt.a1, opt.a2, opt.attempts, opt.seed);
            CoverAlgebra<K> cov = cover_from_cubic_section(w.section);
            BranchGenus bg = branch_and_genus(cov);
            out["attempts"] = w.stats.attempts;
            out["p"] = poly_str(w.section.p);
            out["q"] = poly_str(w.section.q);
            out["r"] = poly_str(w.section.r);
            out["s"] = poly_str(w.section.s);
            out["discriminant"] = poly_str(w.discriminant);
            out["type"] = type_to_json(tschirnhausen(cov).type);
            out["branch_degree"] = bg.branch_degree;
            emit(out, opt.json, std::cout);
            return 0;
        } catch (const MirandaExhausted& e) {
            out["exhausted"] = true;
            out["error"] = e.what();
            emit(out, opt.json, std::cout);
            return 1;
        }
    });
}

int run_dims(const Options& opt) {
    HurwitzParams p{opt.d, opt.g, opt.g_y};
    Json out{{"d", p.d}, {"g", p.g}, {"g_y", p.g_y}, {"b", p.b()}, {"dimension", hurwitz_dimension(p)}};
    emit(out, opt.json, std::cout);
    return 0;
}

int run_maroni(const Options& opt) {
    HurwitzParams p{opt.d, opt.g, opt.g_y};
    SplittingType t(parse_int_list(opt.type_list));
    MaroniExpected m = maroni_expected(t, p);
    Json out{{"type", t.parts()},
             {"d", p.d},
             {"g", p.g},
             {"g_y", p.g_y},
             {"b", p.b()},
             {"end_h1", end_h1(t)},
             {"hilb_dim", m.hilb_dim},
             {"affine_group_dim", m.affine_group_dim},
             {"maroni_dim", m.maroni_dim},
             {"codim", m.codim}};
    emit(out, opt.json, std::cout);
    return 0;
}

int run_filtration(const Options& opt) {
    std::vector<int> degs = filtration_degrees(opt.rank, opt.degree, opt.gap);
    Json out{{"rank", opt.rank},
             {"degree", opt.degree},
             {"gap", opt.gap},
             {"filtration", degs},
             {"target", rees_degeneration_target(SplittingType(degs), opt.gap).parts()}};
    emit(out, opt.json, std::cout);
    return 0;
}

int run_verify(const Options& opt) {
    RunConfig cfg;
    cfg.characteristic = opt.characteristic;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.output = opt.output;
    cfg.format = opt.json ? "json" : "text";
    return with_field(opt.characteristic, [&](auto tag) {
        using K = typename decltype(tag)::type;
        SuiteReport rep = run_suite<K>(opt.suite, cfg);
        if (cfg.output.empty()) {
            emit(rep.data, opt.json, std::cout);
        } else {
            std::ofstream os(cfg.output, std::ios::binary);
            if (!os) throw std::domain_error("cannot write file " + cfg.output);
            emit(rep.data, opt.json, os);
        }
        return rep.pass ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact splitting types, covers of the line, and their verification suites"};
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--char", opt.characteristic, "coefficient field characteristic (0 or a prime)");
        sub->add_option("--seed", opt.seed, "seed for every random draw");
        sub->add_flag("--json", opt.json, "emit JSON instead of text");
    };

    CLI::App* scrollar = app.add_subcommand("scrollar", "splitting type of the bundle attached to a model file");
    scrollar->add_option("--model", opt.model_file, "plane model, cover JSON, or bundle JSON")->required();
    add_common(scrollar);
    scrollar->callback([&] { action = [&] { return run_scrollar(opt); }; });

    CLI::App* pinch = app.add_subcommand("pinch", "build a pinch tower realizing the given degrees");
    pinch->add_option("--degrees", opt.degrees, "comma-separated sorted positive degrees")->required();
    add_common(pinch);
    pinch->callback([&] { action = [&] { return run_pinch(opt); }; });

    CLI::App* kummer = app.add_subcommand("kummer", "splitting type and genus of the cover y^d = p(x)");
    kummer->add_option("--d", opt.d, "cover degree")->required();
    kummer->add_option("--p", opt.p, "squarefree polynomial in x")->required();
    add_common(kummer);
    kummer->callback([&] { action = [&] { return run_kummer(opt); }; });

    CLI::App* inflate = app.add_subcommand("inflate", "apply an elementary modification to a bundle file");
    inflate->add_option("--bundle", opt.bundle_file, "bundle JSON file")->required();
    inflate->add_option("--point", opt.point, "base point of the modification")->required();
    inflate->add_option("--vectors", opt.vectors, "fiber vector, comma-separated (repeatable)")->required();
    add_common(inflate);
    inflate->callback([&] { action = [&] { return run_inflate(opt); }; });

    CLI::App* lingen = app.add_subcommand("lingen", "sampling rank certificate for the pairing functionals");
    lingen->add_option("--d", opt.d, "number of coordinate points")->required();
    lingen->add_option("--trials", opt.trials, "sample rows to draw");
    add_common(lingen);
    lingen->callback([&] { action = [&] { return run_lingen(opt); }; });

    CLI::App* rnc = app.add_subcommand("rnc", "parametrized rational normal curve and transversality report");
    rnc->add_option("--a", opt.a_list, "comma-separated distinct parameters")->required();
    rnc->add_option("--b", opt.b_list, "comma-separated nonzero weights")->required();
    add_common(rnc);
    rnc->callback([&] { action = [&] { return run_rnc(opt); }; });

    CLI::App* miranda = app.add_subcommand("miranda", "realizability of a rank-2 triple-cover type");
    miranda->add_option("--a1", opt.a1, "smaller invariant")->required();
    miranda->add_option("--a2", opt.a2, "larger invariant")->required();
    miranda->add_flag("--construct", opt.construct, "search for a simple-branching witness");
    miranda->add_option("--attempts", opt.attempts, "witness search budget");
    add_common(miranda);
    miranda->callback([&] { action = [&] { return run_miranda(opt); }; });

    CLI::App* dims = app.add_subcommand("dims", "moduli dimension of degree-d genus-g covers");
    dims->add_option("--d", opt.d, "cover degree")->required();
    dims->add_option("--g", opt.g, "source genus")->required();
    dims->add_option("--gy", opt.g_y, "base genus")->required();
    add_common(dims);
    dims->callback([&] { action = [&] { return run_dims(opt); }; });

    CLI::App* maroni = app.add_subcommand("maroni", "expected dimensions of a splitting-type stratum");
    maroni->add_option("--type", opt.type_list, "comma-separated splitting type")->required();
    maroni->add_option("--d", opt.d, "cover degree")->required();
    maroni->add_option("--g", opt.g, "source genus")->required();
    maroni->add_option("--gy", opt.g_y, "base genus")->required();
    add_common(maroni);
    maroni->callback([&] { action = [&] { return run_maroni(opt); }; });

    CLI::App* filtration = app.add_subcommand("filtration", "degeneration target with prescribed degree gaps");
    filtration->add_option("--rank", opt.rank, "bundle rank")->required();
    filtration->add_option("--degree", opt.degree, "bundle degree")->required();
    filtration->add_option("--gap", opt.gap, "gap between consecutive degrees")->required();
    add_common(filtration);
    filtration->callback([&] { action = [&] { return run_filtration(opt); }; });

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", opt.suite, "pinch-tower | kummer | inflation-law | lingen | miranda | dims | popov")
        ->required();
    verify->add_option("--trials", opt.trials, "override the per-suite trial count");
    verify->add_option("--output", opt.output, "write the report to a file instead of stdout");
    add_common(verify);
    verify->callback([&] { action = [&] { return run_verify(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const tschirn::ParseError& e) {
        std::cerr << "tschirn: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "tschirn: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "tschirn: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "tschirn: " << e.what() << "\n";
        return 1;
    }
}
