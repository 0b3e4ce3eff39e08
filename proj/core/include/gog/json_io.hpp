#ifndef GOG_JSON_IO_HPP
#define GOG_JSON_IO_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <variant>

#include "gog/counting.hpp"
#include "gog/motionspace.hpp"
#include "gog/realisation.hpp"

namespace gog {

/// Insertion-ordered JSON keeps every report byte-stable.
using ojson = nlohmann::ordered_json;

// rationals appear as integers or "p/q" strings
ojson rat_to_json(const Rat& r);
Rat rat_from_json(const ojson& v);

ojson matrix_to_json(const Mat& m);
Mat matrix_from_json(const ojson& v);

ojson hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const ojson& v);

/// Finite-group instance kinds.
struct ColouringInstance {
  Hypergraph graph;
  int n = 3;
  std::map<std::string, int> colouring;
};
struct TensorInstance {
  Hypergraph gamma;
  Hypergraph lambda;
};

using ParsedInstance = std::variant<Instance, ColouringInstance, TensorInstance>;

/// Strict parse: unknown fields are input errors everywhere.
ParsedInstance parse_instance(const ojson& j);
ParsedInstance parse_instance_file(const std::string& path);

ojson instance_to_json(const Instance& inst);

ojson motion_report_to_json(const MotionReport& rep, const Realisation* names = nullptr);
ojson constrained_report_to_json(const ConstrainedReport& rep);
ojson maxwell_to_json(const MaxwellBound& b);
ojson sparsity_scan_to_json(const SparsityScan& s);
ojson banana_to_json(const BananaResult& b, const Realisation& r);

} // namespace gog

#endif
