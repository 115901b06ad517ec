#include "decat/json_io.hpp"

#include <stdexcept>

namespace decat {
namespace io {

json int_to_json(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array of ints");
    return Partition(j.get<std::vector<int>>());
}

json sym_to_json(const SymElement& x) {
    json terms = json::array();
    for (const auto& [lam, c] : x.terms())
        terms.push_back({{"coeff", int_to_json(c)}, {"partition", partition_to_json(lam)}});
    return terms;
}

SymElement sym_from_json(const json& j, int bound) {
    SymElement r(bound);
    if (!j.is_array()) throw std::invalid_argument("SymElement must be a JSON array");
    for (const auto& t : j) {
        if (t.is_array()) {
            r.add_term(partition_from_json(t), 1);
        } else if (t.is_object()) {
            r.add_term(partition_from_json(t.at("partition")), int_from_json(t.at("coeff")));
        } else {
            throw std::invalid_argument("SymElement term must be a partition or {partition,coeff}");
        }
    }
    return r;
}

json laurent_to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"coeff", int_to_json(c)}, {"exp", e}});
    return out;
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    if (j.is_number_integer() || j.is_string()) {  // constant shorthand
        p += LaurentPoly(int_from_json(j));
        return p;
    }
    for (const auto& t : j) p.add_term(t.at("exp").get<int>(), int_from_json(t.at("coeff")));
    return p;
}

namespace {

json blm_word_to_json(const blm::CanonicalWord& w) {
    return {{"a", w.a}, {"b", w.b}, {"n", w.n}, {"shape", w.ef ? "EF" : "FE"}};
}

blm::CanonicalWord blm_word_from_json(const json& j) {
    std::string shape = j.value("shape", "FE");
    return blm::CanonicalWord::make(j.at("a").get<int>(), j.at("b").get<int>(),
                                    j.at("n").get<int>(), shape == "EF");
}

}  // namespace

json blm_to_json(const blm::BlmElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"coeff", laurent_to_json(c)}, {"word", blm_word_to_json(w)}});
    return {{"source", x.source()}, {"target", x.target()}, {"terms", terms}};
}

blm::BlmElement blm_from_json(const json& j) {
    if (j.is_object() && j.contains("a")) {  // bare word shorthand
        return blm::BlmElement::word(blm_word_from_json(j));
    }
    blm::BlmElement r(j.at("source").get<int>(), j.at("target").get<int>());
    for (const auto& t : j.at("terms"))
        r.add_term(blm_word_from_json(t.at("word")), laurent_from_json(t.at("coeff")));
    return r;
}

json blm_q1_to_json(const std::map<blm::CanonicalWord, Int>& x) {
    json terms = json::array();
    for (const auto& [w, c] : x)
        terms.push_back({{"coeff", int_to_json(c)}, {"word", blm_word_to_json(w)}});
    return terms;
}

json garland_word_to_json(const cur::GarlandWord& w) {
    json f = json::array(), e = json::array();
    for (const auto& d : w.f) f.push_back({d.index, d.power});
    for (const auto& d : w.e) e.push_back({d.index, d.power});
    return {{"e", e}, {"f", f}, {"n", w.n}, {"tau", partition_to_json(w.tau)}};
}

namespace {

cur::GarlandWord garland_word_from_json(const json& j) {
    cur::GarlandWord w;
    for (const auto& p : j.at("f")) w.f.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    for (const auto& p : j.at("e")) w.e.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
    w.tau = partition_from_json(j.at("tau"));
    w.n = j.at("n").get<int>();
    if (!w.valid()) throw std::invalid_argument("malformed Garland word");
    return w;
}

}  // namespace

json garland_to_json(const cur::GarlandElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"coeff", int_to_json(c)}, {"word", garland_word_to_json(w)}});
    return {{"source", x.source()}, {"target", x.target()}, {"terms", terms}};
}

cur::GarlandElement garland_from_json(const json& j) {
    if (j.is_object() && j.contains("e") && !j.contains("terms"))
        return cur::GarlandElement::word(garland_word_from_json(j));
    cur::GarlandElement r(j.at("source").get<int>(), j.at("target").get<int>());
    for (const auto& t : j.at("terms"))
        r.add_term(garland_word_from_json(t.at("word")), int_from_json(t.at("coeff")));
    return r;
}

namespace {

json trace_word_to_json(const tr::TraceWord& w) {
    return {{"a", w.a},
            {"b", w.b},
            {"lam", partition_to_json(w.lam)},
            {"mu", partition_to_json(w.mu)},
            {"n", w.n},
            {"tau", partition_to_json(w.tau)}};
}

tr::TraceWord trace_word_from_json(const json& j) {
    tr::TraceWord w;
    w.a = j.at("a").get<int>();
    w.b = j.at("b").get<int>();
    w.lam = partition_from_json(j.at("lam"));
    w.mu = partition_from_json(j.at("mu"));
    w.tau = partition_from_json(j.at("tau"));
    w.n = j.at("n").get<int>();
    if (!w.valid()) throw std::invalid_argument("malformed trace word");
    return w;
}

}  // namespace

json trace_to_json(const tr::TraceElement& x) {
    json terms = json::array();
    for (const auto& [w, c] : x.terms())
        terms.push_back({{"coeff", int_to_json(c)}, {"word", trace_word_to_json(w)}});
    return {{"source", x.source()}, {"target", x.target()}, {"terms", terms}};
}

tr::TraceElement trace_from_json(const json& j) {
    if (j.is_object() && j.contains("lam") && !j.contains("terms"))
        return tr::TraceElement::word(trace_word_from_json(j));
    tr::TraceElement r(j.at("source").get<int>(), j.at("target").get<int>());
    for (const auto& t : j.at("terms"))
        r.add_term(trace_word_from_json(t.at("word")), int_from_json(t.at("coeff")));
    return r;
}

json center_to_json(const bub::CenterElement& x) {
    return {{"n", x.n}, {"value", sym_to_json(x.value)}};
}

json homology_to_json(const std::vector<hh::Homology>& groups) {
    json out = json::array();
    for (size_t d = 0; d < groups.size(); ++d) {
        json tors = json::array();
        for (const Int& t : groups[d].torsion) tors.push_back(int_to_json(t));
        out.push_back({{"degree", d}, {"free_rank", groups[d].free_rank}, {"torsion", tors}});
    }
    return out;
}

hh::FinLinCat category_from_json(const json& j) {
    hh::FinLinCat C;
    std::map<std::string, int> obj_index;
    for (const auto& o : j.at("objects")) {
        std::string name = o.get<std::string>();
        if (obj_index.count(name)) throw std::invalid_argument("duplicate object " + name);
        obj_index[name] = C.add_object(name);
    }
    std::map<std::string, hh::MorKey> mor_index;
    for (const auto& [key, hom] : j.at("homs").items()) {
        auto arrow = key.find("->");
        if (arrow == std::string::npos)
            throw std::invalid_argument("hom key must look like \"x->y\": " + key);
        int x = obj_index.at(key.substr(0, arrow));
        int y = obj_index.at(key.substr(arrow + 2));
        std::vector<std::string> basis = hom.at("basis").get<std::vector<std::string>>();
        if (hom.contains("rank") && hom.at("rank").get<int>() != static_cast<int>(basis.size()))
            throw std::invalid_argument("hom " + key + ": rank disagrees with basis size");
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (mor_index.count(basis[static_cast<size_t>(k)]))
                throw std::invalid_argument("duplicate morphism name " +
                                            basis[static_cast<size_t>(k)]);
            mor_index[basis[static_cast<size_t>(k)]] = {x, y, k};
        }
        C.set_hom(x, y, basis);
    }
    auto combo_from = [&](const json& cj, int x, int y) {
        hh::Combo combo;
        for (const auto& t : cj) {
            hh::MorKey k = mor_index.at(t.at("basis").get<std::string>());
            if (k.from != x || k.to != y)
                throw std::invalid_argument("combo references morphism outside the hom module");
            combo.emplace_back(k.idx, int_from_json(t.at("coeff")));
        }
        return combo;
    };
    for (const auto& [name, idj] : j.at("identities").items()) {
        int x = obj_index.at(name);
        if (idj.is_string()) {
            hh::MorKey k = mor_index.at(idj.get<std::string>());
            if (k.from != x || k.to != x)
                throw std::invalid_argument("identity of " + name + " is not an endomorphism");
            C.set_identity(x, {{k.idx, 1}});
        } else {
            C.set_identity(x, combo_from(idj, x, x));
        }
    }
    if (j.contains("compose"))
        for (const auto& e : j.at("compose")) {
            hh::MorKey g = mor_index.at(e.at("g").get<std::string>());
            hh::MorKey f = mor_index.at(e.at("f").get<std::string>());
            if (f.to != g.from)
                throw std::invalid_argument("compose entry not composable: " +
                                            e.at("g").get<std::string>() + " o " +
                                            e.at("f").get<std::string>());
            C.set_compose(g, f, combo_from(e.at("result"), f.from, g.to));
        }
    C.default_identity_compositions();
    return C;
}

}  // namespace io
}  // namespace decat
