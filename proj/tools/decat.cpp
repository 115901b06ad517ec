#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

#include "decat/json_io.hpp"
#include "decat/suites.hpp"
#include "decat/vpres.hpp"

using namespace decat;
using io::json;

namespace {

json parse_json_arg(const std::string& s) {
    return json::parse(s);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<SymGen> parse_sym_word(const std::string& s) {
    std::vector<SymGen> word;
    for (const auto& tok : split_ws(s)) {
        if (tok.size() < 2) throw CLI::ValidationError("bad generator token: " + tok);
        char kind = tok[0];
        std::string rest = tok.substr(1);
        auto comma = rest.find(',');
        if (kind == 'e' && comma != std::string::npos) {
            word.push_back(gen_etj(std::stoi(rest.substr(0, comma)),
                                   std::stoi(rest.substr(comma + 1))));
        } else if (kind == 'e') {
            word.push_back(gen_e(std::stoi(rest)));
        } else if (kind == 'h') {
            word.push_back(gen_h(std::stoi(rest)));
        } else if (kind == 'p') {
            word.push_back(gen_p(std::stoi(rest)));
        } else {
            throw CLI::ValidationError("unknown generator kind in token: " + tok);
        }
    }
    return word;
}

std::vector<cur::QGen> parse_current_word(const std::string& s) {
    std::vector<cur::QGen> word;
    for (const auto& tok : split_ws(s)) {
        if (tok.size() < 2) throw CLI::ValidationError("bad generator token: " + tok);
        cur::QGen::Kind kind;
        switch (tok[0]) {
            case 'E': kind = cur::QGen::Kind::E; break;
            case 'F': kind = cur::QGen::Kind::F; break;
            case 'H': kind = cur::QGen::Kind::H; break;
            default: throw CLI::ValidationError("unknown generator kind in token: " + tok);
        }
        std::string rest = tok.substr(1);
        int pow = 1;
        auto caret = rest.find('^');
        if (caret != std::string::npos) {
            pow = std::stoi(rest.substr(caret + 1));
            rest = rest.substr(0, caret);
        }
        int idx = std::stoi(rest);
        for (int k = 0; k < pow; ++k) word.push_back({kind, idx});
    }
    return word;
}

Partition parse_paren_partition(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '(') throw CLI::ValidationError("expected ( in " + s);
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw CLI::ValidationError("missing ) in " + s);
    std::string inner = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    std::vector<int> parts;
    std::istringstream is(inner);
    std::string piece;
    while (std::getline(is, piece, ','))
        if (!piece.empty()) parts.push_back(std::stoi(piece));
    return Partition(parts);
}

vp::VWord parse_v_word(const std::string& s) {
    vp::VWord w;
    for (const auto& tok : split_ws(s)) {
        if (tok[0] == 't' || tok[0] == 'u') {
            w.push_back({tok[0] == 't' ? vp::VGen::Kind::T : vp::VGen::Kind::U,
                         std::stoi(tok.substr(1)),
                         {}});
        } else if (tok.rfind("d'", 0) == 0) {
            size_t pos = 2;
            w.push_back({vp::VGen::Kind::Dp, 0, parse_paren_partition(tok, pos)});
        } else if (tok[0] == 'd') {
            size_t pos = 1;
            w.push_back({vp::VGen::Kind::D, 0, parse_paren_partition(tok, pos)});
        } else if (tok[0] == 'b') {
            size_t pos = 1;
            w.push_back({vp::VGen::Kind::B, 0, parse_paren_partition(tok, pos)});
        } else {
            throw CLI::ValidationError("unknown generator token: " + tok);
        }
    }
    return w;
}

void emit(const json& j, bool text, const std::string& as_text) {
    if (text) std::cout << as_text << "\n";
    else std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decat: exact computations in decategorified quantum sl2"};
    app.require_subcommand(1);
    bool text = false;
    app.add_flag("--text", text, "human-readable output instead of JSON");

    int exit_code = 0;

    // ----- sym ------------------------------------------------------------
    auto* sym = app.add_subcommand("sym", "symmetric functions in the Schur basis");
    sym->require_subcommand(1);
    {
        auto* c = sym->add_subcommand("mul", "product of two elements");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto bound = std::make_shared<int>(-1);
        c->add_option("x", *x, "first factor (JSON)")->required();
        c->add_option("y", *y, "second factor (JSON)")->required();
        c->add_option("--bound", *bound, "variable bound a (default: none)");
        c->callback([=, &text] {
            SymElement a = io::sym_from_json(parse_json_arg(*x), *bound);
            SymElement b = io::sym_from_json(parse_json_arg(*y), *bound);
            SymElement r = a * b;
            emit(io::sym_to_json(r), text, r.str());
        });
    }
    {
        auto* c = sym->add_subcommand("straighten", "straighten a quasi-index");
        auto m = std::make_shared<std::string>();
        c->add_option("mtilde", *m, "quasi-index (JSON array)")->required();
        c->callback([=, &text] {
            std::vector<int> mt = parse_json_arg(*m).get<std::vector<int>>();
            Straightened s = straighten(mt);
            json out = s.zero ? json{{"zero", true}}
                              : json{{"lambda", io::partition_to_json(s.lambda)},
                                     {"sign", s.sign},
                                     {"zero", false}};
            emit(out, text,
                 s.zero ? "0"
                        : (s.sign > 0 ? "+" : "-") + std::string("s") + s.lambda.str());
        });
    }
    {
        auto* c = sym->add_subcommand("wedge", "wedge product Sym_a x Sym_b -> Sym_{a+b}");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto a = std::make_shared<int>();
        auto b = std::make_shared<int>();
        c->add_option("--a", *a, "left bound")->required();
        c->add_option("--b", *b, "right bound")->required();
        c->add_option("x", *x, "element of Sym_a (JSON)")->required();
        c->add_option("y", *y, "element of Sym_b (JSON)")->required();
        c->callback([=, &text] {
            SymElement ax = io::sym_from_json(parse_json_arg(*x), *a);
            SymElement by = io::sym_from_json(parse_json_arg(*y), *b);
            SymElement r = wedge(*a, *b, ax, by);
            emit(io::sym_to_json(r), text, r.str());
        });
    }
    {
        auto* c = sym->add_subcommand("schur", "expand a word in e/h/p/e_{t,j} generators");
        auto w = std::make_shared<std::string>();
        c->add_option("word", *w, "e.g. \"e2 h3 p4 e2,1\" (e2,1 means e_{t=2,j=1})")->required();
        c->callback([=, &text] {
            SymElement r = to_schur(parse_sym_word(*w));
            emit(io::sym_to_json(r), text, r.str());
        });
    }

    // ----- blm ------------------------------------------------------------
    auto* blmc = app.add_subcommand("blm", "idempotented quantum sl2, canonical basis");
    blmc->require_subcommand(1);
    {
        auto* c = blmc->add_subcommand("mul", "product in the canonical basis");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        c->add_option("x", *x, "left factor (JSON element or word)")->required();
        c->add_option("y", *y, "right factor (JSON element or word)")->required();
        c->callback([=, &text] {
            blm::BlmElement r = blm::mul(io::blm_from_json(parse_json_arg(*x)),
                                         io::blm_from_json(parse_json_arg(*y)));
            emit(io::blm_to_json(r), text, r.str());
        });
    }
    {
        auto* c = blmc->add_subcommand("qbinom", "Gaussian binomial [m choose j]");
        auto m = std::make_shared<int>();
        auto j = std::make_shared<int>();
        c->add_option("m", *m, "top (any integer)")->required();
        c->add_option("j", *j, "bottom (nonnegative)")->required();
        c->callback([=, &text] {
            LaurentPoly p = gauss_binom(*m, *j);
            emit(io::laurent_to_json(p), text, p.str());
        });
    }

    // ----- bubbles ----------------------------------------------------------
    auto* bubc = app.add_subcommand("bubbles", "the center End(1_n)");
    bubc->require_subcommand(1);
    {
        auto* c = bubc->add_subcommand("series", "fake bubble series by inversion");
        auto n = std::make_shared<int>(0);
        auto D = std::make_shared<int>(5);
        c->add_option("--n", *n, "weight");
        c->add_option("--maxdeg", *D, "half-degree bound");
        c->callback([=, &text] {
            auto series = bub::fake_bubble_series(*n, *D);
            json out = json::array();
            std::string t;
            for (size_t m = 0; m < series.size(); ++m) {
                json entry = io::center_to_json(series[m]);
                entry["degree"] = 2 * m;
                out.push_back(entry);
                t += "deg " + std::to_string(2 * m) + ": " + series[m].value.str() + "\n";
            }
            emit(out, text, t);
        });
    }
    {
        auto* c = bubc->add_subcommand("identity", "sum (-1)^{m-l} l h_l e_{m-l} (equals p_m)");
        auto m = std::make_shared<int>();
        c->add_option("--m", *m, "degree")->required();
        c->callback([=, &text] {
            SymElement r = bub::commutator_identity(*m);
            emit(io::sym_to_json(r), text, r.str());
        });
    }

    // ----- current ----------------------------------------------------------
    auto* curc = app.add_subcommand("current", "idempotented integral current algebra");
    curc->require_subcommand(1);
    {
        auto* c = curc->add_subcommand("nf", "normal form of a generator word");
        auto w = std::make_shared<std::string>();
        auto n = std::make_shared<int>();
        c->add_option("word", *w, "e.g. \"E0 F0\" or \"H1 E0^2\"")->required();
        c->add_option("--n", *n, "source weight")->required();
        c->callback([=, &text] {
            cur::GarlandElement r = cur::normal_form(parse_current_word(*w), *n);
            emit(io::garland_to_json(r), text, r.str());
        });
    }
    {
        auto* c = curc->add_subcommand("mul", "product of Garland elements");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        c->add_option("x", *x, "left factor (JSON)")->required();
        c->add_option("y", *y, "right factor (JSON)")->required();
        c->callback([=, &text] {
            cur::GarlandElement r = cur::mul(io::garland_from_json(parse_json_arg(*x)),
                                             io::garland_from_json(parse_json_arg(*y)));
            emit(io::garland_to_json(r), text, r.str());
        });
    }
    {
        auto* c = curc->add_subcommand("basis", "enumerate Garland basis words");
        auto n = std::make_shared<int>();
        auto m = std::make_shared<int>();
        auto D = std::make_shared<int>(0);
        auto bmax = std::make_shared<int>(0);
        c->add_option("--n", *n, "source weight")->required();
        c->add_option("--m", *m, "target weight")->required();
        c->add_option("--maxdeg", *D, "loop degree bound");
        c->add_option("--bmax", *bmax, "F-side thickness bound (default 0: minimal sector)");
        c->callback([=, &text] {
            auto words = cur::enumerate_basis(*n, *m, *D, *bmax);
            json out = json::array();
            std::string t;
            for (const auto& w : words) {
                out.push_back(io::garland_word_to_json(w));
                t += w.str() + "\n";
            }
            emit(out, text, t + std::to_string(words.size()) + " words");
        });
    }
    {
        auto* c = curc->add_subcommand("phi", "phi coordinates / inverse");
        auto x = std::make_shared<std::string>();
        auto inv = std::make_shared<bool>(false);
        c->add_option("x", *x, "SymElement (JSON) or, with --inv, H-monomial combo")->required();
        c->add_flag("--inv", *inv, "apply phi^{-1} to {partition: coeff} H-monomials");
        c->callback([=, &text] {
            if (*inv) {
                std::map<Partition, Int> mono;
                for (const auto& t : parse_json_arg(*x))
                    mono[io::partition_from_json(t.at("indices"))] =
                        io::int_from_json(t.at("coeff"));
                SymElement r = cur::phi_inv(mono);
                emit(io::sym_to_json(r), text, r.str());
            } else {
                auto coords = cur::phi(io::sym_from_json(parse_json_arg(*x)));
                json out = json::array();
                std::string t;
                for (const auto& [mu, c] : coords) {
                    out.push_back({{"coeff", std::string(c.get_str())},
                                   {"indices", io::partition_to_json(mu)}});
                    t += std::string(c.get_str()) + " * H_" + mu.str() + "\n";
                }
                emit(out, text, t);
            }
        });
    }

    // ----- trace ------------------------------------------------------------
    auto* trc = app.add_subcommand("trace", "the trace of categorified quantum sl2");
    trc->require_subcommand(1);
    {
        auto* c = trc->add_subcommand("compose", "composition via the current-algebra transport");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        c->add_option("x", *x, "left factor (JSON)")->required();
        c->add_option("y", *y, "right factor (JSON)")->required();
        c->callback([=, &text] {
            tr::TraceElement r = tr::compose(io::trace_from_json(parse_json_arg(*x)),
                                             io::trace_from_json(parse_json_arg(*y)));
            emit(io::trace_to_json(r), text, r.str());
        });
    }
    {
        auto* c = trc->add_subcommand("dims", "graded dimensions");
        auto n = std::make_shared<int>();
        auto m = std::make_shared<int>();
        auto d = std::make_shared<int>(4);
        auto bmax = std::make_shared<int>(4);
        c->add_option("--n", *n, "source weight")->required();
        c->add_option("--m", *m, "target weight")->required();
        c->add_option("--deg", *d, "max half-degree");
        c->add_option("--bmax", *bmax, "F-thickness bound");
        c->callback([=, &text] {
            json out = json::array();
            std::string t;
            for (int k = 0; k <= *d; ++k) {
                long dim = tr::graded_dim(*n, *m, k, *bmax);
                out.push_back({{"degree", 2 * k}, {"dim", dim}});
                t += "deg " + std::to_string(2 * k) + ": " + std::to_string(dim) + "\n";
            }
            emit(out, text, t);
        });
    }
    {
        auto* c = trc->add_subcommand("tocurrent", "transport to/from the current algebra");
        auto x = std::make_shared<std::string>();
        auto inv = std::make_shared<bool>(false);
        c->add_option("x", *x, "TraceElement (or GarlandElement with --inv)")->required();
        c->add_flag("--inv", *inv, "apply from_current instead");
        c->callback([=, &text] {
            if (*inv) {
                tr::TraceElement r = tr::from_current(io::garland_from_json(parse_json_arg(*x)));
                emit(io::trace_to_json(r), text, r.str());
            } else {
                cur::GarlandElement r = tr::to_current(io::trace_from_json(parse_json_arg(*x)));
                emit(io::garland_to_json(r), text, r.str());
            }
        });
    }
    {
        auto* c = trc->add_subcommand("verify", "run a named verification suite");
        auto name = std::make_shared<std::string>();
        auto seed = std::make_shared<long>(0);
        c->add_option("--suite", *name, "zzz|ja|r7|qqq|k0 (any suite name accepted)")->required();
        c->add_option("--seed", *seed, "seed for randomized checks");
        c->callback([=, &text, &exit_code] {
            suites::SuiteOptions opts;
            opts.seed = *seed;
            suites::SuiteReport rep = suites::run_suite(*name, opts);
            emit(rep.to_json(), text, rep.to_text());
            if (!rep.ok()) exit_code = 1;
        });
    }

    // ----- vpres ------------------------------------------------------------
    auto* vpc = app.add_subcommand("vpres", "presented category V(n,m)");
    vpc->require_subcommand(1);
    {
        auto* c = vpc->add_subcommand("nf", "normal form of a word");
        auto w = std::make_shared<std::string>();
        auto n = std::make_shared<int>();
        auto m = std::make_shared<int>();
        auto b = std::make_shared<int>();
        auto a = std::make_shared<int>();
        c->add_option("word", *w, "e.g. \"u0 t1 d(2,1) b(1)\"")->required();
        c->add_option("--n", *n, "source weight of the hom-category")->required();
        c->add_option("--m", *m, "target weight of the hom-category")->required();
        c->add_option("--b", *b, "source object F-thickness")->required();
        c->add_option("--a", *a, "source object E-thickness")->required();
        c->callback([=, &text] {
            vp::VElement x(*n, *m, *b, *a);
            x.add_word(parse_v_word(*w), 1);
            vp::VElement r = vp::normal_form(x);
            json out = json::array();
            for (const auto& [word, coeff] : r.terms()) {
                json gens = json::array();
                for (const auto& g : word)
                    gens.push_back(g.str());
                out.push_back({{"coeff", std::string(coeff.get_str())}, {"word", gens}});
            }
            emit(out, text, r.str());
        });
    }
    {
        auto* c = vpc->add_subcommand("dims", "normal-form counts per degree");
        auto n = std::make_shared<int>();
        auto a = std::make_shared<int>();
        auto b = std::make_shared<int>();
        auto delta = std::make_shared<int>(0);
        auto D = std::make_shared<int>(8);
        auto side = std::make_shared<std::string>("forms");
        c->add_option("--n", *n, "weight")->required();
        c->add_option("--a", *a, "E-thickness")->required();
        c->add_option("--b", *b, "F-thickness")->required();
        c->add_option("--delta", *delta, "thickness shift");
        c->add_option("--maxdeg", *D, "degree bound");
        c->add_option("--side", *side, "forms (default) | bplus | bminus");
        c->callback([=, &text] {
            std::map<int, long> forms;
            if (*side == "forms") forms = vp::enumerate_forms(*n, *a, *b, *delta, *D);
            else if (*side == "bplus") forms = vp::enumerate_Bplus(*n, *a, *b, *delta, *D);
            else if (*side == "bminus") forms = vp::enumerate_Bminus(*n, *a, *b, *delta, *D);
            else throw CLI::ValidationError("--side must be forms, bplus or bminus");
            json out = json::array();
            std::string t;
            for (const auto& [deg, cnt] : forms) {
                out.push_back({{"count", cnt}, {"degree", deg}});
                t += "deg " + std::to_string(deg) + ": " + std::to_string(cnt) + "\n";
            }
            emit(out, text, t);
        });
    }

    // ----- hh ---------------------------------------------------------------
    auto* hhc = app.add_subcommand("hh", "Hochschild-Mitchell homology");
    {
        auto* c = hhc->add_subcommand("compute", "homology of a finite linear category");
        auto input = std::make_shared<std::string>();
        auto maxdeg = std::make_shared<int>(5);
        c->add_option("--input", *input, "JSON category description file")->required();
        c->add_option("--maxdeg", *maxdeg, "truncation degree (reports HH_0..HH_{d-1})");
        c->callback([=, &text] {
            std::ifstream in(*input);
            if (!in) throw CLI::ValidationError("cannot open " + *input);
            json desc = json::parse(in);
            hh::FinLinCat C = io::category_from_json(desc);
            C.validate();
            long guard = 2'000'000;
            if (const char* env = std::getenv("DECAT_MAX_ENTRIES")) guard = std::atol(env);
            auto H = hh::hochschild(C, *maxdeg, guard);
            std::string t;
            for (size_t i = 0; i < H.size(); ++i)
                t += "HH_" + std::to_string(i) + " = " + H[i].str() + "\n";
            emit(io::homology_to_json(H), text, t);
        });
    }

    // ----- suite ------------------------------------------------------------
    {
        auto* c = app.add_subcommand("suite", "run a named verification suite");
        auto name = std::make_shared<std::string>();
        auto seed = std::make_shared<long>(0);
        auto bounds = std::make_shared<std::vector<std::string>>();
        c->add_option("name", *name, "one of: sym blm bubbles current zzz ja r7 ap2 qqq k0 cor34 vpres hh")
            ->required();
        c->add_option("--seed", *seed, "seed for randomized checks (default 0)");
        c->add_option("--bound", *bounds, "override a bound, e.g. --bound lr_total=6");
        c->callback([=, &text, &exit_code] {
            suites::SuiteOptions opts;
            opts.seed = *seed;
            for (const auto& kv : *bounds) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--bound expects key=value, got " + kv);
                opts.bounds[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
            }
            suites::SuiteReport rep = suites::run_suite(*name, opts);
            emit(rep.to_json(), text, rep.to_text());
            if (!rep.ok()) exit_code = 1;
        });
    }

    // let --text appear after any subcommand
    std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](const CLI::App*) { return true; })) {
            s->fallthrough();
            fall(s);
        }
    };
    fall(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
