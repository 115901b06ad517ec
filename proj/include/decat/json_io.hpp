#pragma once

#include <json.hpp>

#include "decat/blm.hpp"
#include "decat/bubbles.hpp"
#include "decat/current.hpp"
#include "decat/hochschild.hpp"
#include "decat/laurent.hpp"
#include "decat/sym.hpp"
#include "decat/trace.hpp"

namespace decat {
namespace io {

using json = nlohmann::json;

json int_to_json(const Int& v);      // decimal string
Int int_from_json(const json& j);    // accepts string or number

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// SymElement <-> [{"coeff": "c", "partition": [..]}, ...];
/// parsing also accepts a bare list of partitions (each coefficient 1).
json sym_to_json(const SymElement& x);
SymElement sym_from_json(const json& j, int bound = -1);

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json blm_to_json(const blm::BlmElement& x);
blm::BlmElement blm_from_json(const json& j);
json blm_q1_to_json(const std::map<blm::CanonicalWord, Int>& x);

json garland_to_json(const cur::GarlandElement& x);
cur::GarlandElement garland_from_json(const json& j);
json garland_word_to_json(const cur::GarlandWord& w);

json trace_to_json(const tr::TraceElement& x);
tr::TraceElement trace_from_json(const json& j);

json center_to_json(const bub::CenterElement& x);

json homology_to_json(const std::vector<hh::Homology>& groups);

/// Category description schema:
/// {objects:[...], homs:{"x->y":{rank,basis:[names]}},
///  compose:[{g,f,result:[{basis,coeff}]}], identities:{...}}
hh::FinLinCat category_from_json(const json& j);

}  // namespace io
}  // namespace decat
