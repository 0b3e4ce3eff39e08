#include "gog/json_io.hpp"

#include <fstream>
#include <set>

#include "gog/errors.hpp"

namespace gog {

namespace {

void expect_keys(const ojson& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const std::string& where) {
  require(j.is_object(), where + ": expected an object");
  for (const auto& [key, unused] : j.items())
    require(required.count(key) || optional.count(key), where + ": unknown field \"" + key + "\"");
  for (const auto& key : required)
    require(j.contains(key), where + ": missing field \"" + key + "\"");
}

const ojson& field(const ojson& j, const std::string& key) { return j.at(key); }

std::string string_field(const ojson& j, const std::string& key, const std::string& where) {
  require(j.contains(key) && j.at(key).is_string(), where + ": \"" + key + "\" must be a string");
  return j.at(key).get<std::string>();
}

int int_field(const ojson& j, const std::string& key, const std::string& where) {
  require(j.contains(key) && j.at(key).is_number_integer(),
          where + ": \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

std::vector<Rat> rat_vector(const ojson& v, const std::string& where) {
  require(v.is_array(), where + ": expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& x : v) out.push_back(rat_from_json(x));
  return out;
}

std::map<std::string, std::vector<Rat>> rat_vector_map(const ojson& v, const std::string& where) {
  require(v.is_object(), where + ": expected an object");
  std::map<std::string, std::vector<Rat>> out;
  for (const auto& [key, val] : v.items()) out[key] = rat_vector(val, where + "." + key);
  return out;
}

} // namespace

ojson rat_to_json(const Rat& r) {
  if (is_integer(r) && r.get_num().fits_slong_p())
    return ojson(static_cast<long long>(r.get_num().get_si()));
  return ojson(rat_to_string(r));
}

Rat rat_from_json(const ojson& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_float())
    throw input_error("floating-point literals are not exact; write rationals as \"p/q\"");
  throw input_error("expected a rational (integer or \"p/q\")");
}

ojson matrix_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const ojson& v) {
  require(v.is_array(), "expected a matrix as an array of rows");
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : v) rows.push_back(rat_vector(r, "matrix row"));
  for (const auto& r : rows)
    require(r.size() == rows.front().size(), "matrix rows have uneven length");
  return rows.empty() ? Mat() : Mat::from_rows(rows);
}

ojson hypergraph_to_json(const Hypergraph& h) {
  ojson j;
  j["vertices"] = h.vertices();
  ojson edges = ojson::array();
  for (const auto& e : h.edges()) {
    ojson je;
    je["id"] = e.id;
    je["vertices"] = e.vertices;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  if (h.allows_empty_edges()) j["allow_empty_edges"] = true;
  return j;
}

Hypergraph hypergraph_from_json(const ojson& v) {
  expect_keys(v, {"vertices", "edges"}, {"allow_empty_edges"}, "hypergraph");
  require(v.at("vertices").is_array(), "hypergraph: vertices must be an array");
  std::vector<std::string> vertices;
  for (const auto& x : v.at("vertices")) {
    require(x.is_string(), "hypergraph: vertex ids must be strings");
    vertices.push_back(x.get<std::string>());
  }
  std::vector<HyperEdge> edges;
  require(v.at("edges").is_array(), "hypergraph: edges must be an array");
  for (const auto& e : v.at("edges")) {
    expect_keys(e, {"id", "vertices"}, {}, "edge");
    HyperEdge he;
    he.id = string_field(e, "id", "edge");
    for (const auto& x : e.at("vertices")) {
      require(x.is_string(), "edge vertex ids must be strings");
      he.vertices.push_back(x.get<std::string>());
    }
    edges.push_back(std::move(he));
  }
  bool allow_empty = false;
  if (v.contains("allow_empty_edges")) {
    require(v.at("allow_empty_edges").is_boolean(), "allow_empty_edges must be a boolean");
    allow_empty = v.at("allow_empty_edges").get<bool>();
  }
  return Hypergraph(std::move(vertices), std::move(edges), allow_empty);
}

namespace {

struct GroupSpec {
  GroupKind kind;
  int parameter;
};

GroupSpec parse_group(const ojson& j) {
  std::string kind = string_field(j, "kind", "group");
  if (kind == "projective") {
    expect_keys(j, {"kind", "n"}, {}, "group");
    return {GroupKind::projective, int_field(j, "n", "group")};
  }
  expect_keys(j, {"kind", "d"}, {}, "group");
  int d = int_field(j, "d", "group");
  if (kind == "euclidean") return {GroupKind::euclidean, d};
  if (kind == "scenes") return {GroupKind::scenes, d};
  if (kind == "dilation") return {GroupKind::dilation, d};
  throw input_error("group: unknown kind \"" + kind + "\"");
}

ojson group_to_json(const GroupModel& m) {
  ojson j;
  j["kind"] = to_string(m.kind());
  if (m.kind() == GroupKind::projective)
    j["n"] = m.parameter();
  else
    j["d"] = m.parameter();
  return j;
}

Hyperplane hyperplane_from_json(const ojson& j, const std::string& where) {
  expect_keys(j, {"normal", "offset"}, {}, where);
  Hyperplane hp;
  hp.normal = rat_vector(j.at("normal"), where + ".normal");
  hp.offset = rat_from_json(j.at("offset"));
  return hp;
}

InstancePayload parse_realisation(const ojson& j, const GroupSpec& group) {
  std::string kind = string_field(j, "kind", "realisation");
  auto check_group = [&](GroupKind expected) {
    require(group.kind == expected,
            "realisation kind \"" + kind + "\" needs a " + to_string(expected) + " group");
  };
  if (kind == "bar_joint") {
    check_group(GroupKind::euclidean);
    expect_keys(j, {"kind", "coordinates"}, {}, "realisation");
    BarJointInstance inst;
    inst.d = group.parameter;
    inst.coordinates = rat_vector_map(j.at("coordinates"), "coordinates");
    return inst;
  }
  if (kind == "projective") {
    check_group(GroupKind::projective);
    expect_keys(j, {"kind", "k", "l", "vertex_subspaces", "edge_subspaces"}, {}, "realisation");
    ProjectiveInstance inst;
    inst.n = group.parameter;
    inst.k = int_field(j, "k", "realisation");
    inst.l = int_field(j, "l", "realisation");
    for (const auto& [key, val] : j.at("vertex_subspaces").items())
      inst.vertex_subspaces[key] = matrix_from_json(val);
    for (const auto& [key, val] : j.at("edge_subspaces").items())
      inst.edge_subspaces[key] = matrix_from_json(val);
    return inst;
  }
  if (kind == "scene") {
    check_group(GroupKind::scenes);
    expect_keys(j, {"kind", "points"}, {}, "realisation");
    SceneInstance inst;
    inst.d = group.parameter;
    inst.points = rat_vector_map(j.at("points"), "points");
    return inst;
  }
  if (kind == "parallel") {
    check_group(GroupKind::dilation);
    expect_keys(j, {"kind", "points", "hyperplanes"}, {}, "realisation");
    ParallelInstance inst;
    inst.d = group.parameter;
    inst.points = rat_vector_map(j.at("points"), "points");
    for (const auto& [key, val] : j.at("hyperplanes").items())
      inst.hyperplanes[key] = hyperplane_from_json(val, "hyperplanes." + key);
    return inst;
  }
  if (kind == "constrained") {
    check_group(GroupKind::euclidean);
    expect_keys(j, {"kind", "coordinates", "constraints"}, {}, "realisation");
    ConstrainedInstance inst;
    inst.d = group.parameter;
    inst.coordinates = rat_vector_map(j.at("coordinates"), "coordinates");
    for (const auto& [key, val] : j.at("constraints").items()) {
      expect_keys(val, {"point", "directions"}, {}, "constraints." + key);
      AffineSubspace space;
      space.base = rat_vector(val.at("point"), "constraints." + key + ".point");
      space.directions = matrix_from_json(val.at("directions"));
      if (space.directions.rows() == 0) space.directions = Mat(0, space.base.size());
      inst.constraints[key] = std::move(space);
    }
    return inst;
  }
  if (kind == "custom") {
    expect_keys(j, {"kind", "algebras"}, {}, "realisation");
    expect_keys(j.at("algebras"), {}, {"vertices", "edges", "incidences"}, "algebras");
    CustomInstance inst;
    inst.kind = group.kind;
    inst.parameter = group.parameter;
    auto read_block = [&](const char* name, std::map<std::string, std::vector<Mat>>& target) {
      if (!j.at("algebras").contains(name)) return;
      for (const auto& [key, val] : j.at("algebras").at(name).items()) {
        require(val.is_array(), std::string("algebras.") + name + "." + key +
                                    ": expected an array of matrices");
        std::vector<Mat> gens;
        for (const auto& g : val) gens.push_back(matrix_from_json(g));
        target[key] = std::move(gens);
      }
    };
    read_block("vertices", inst.vertex_algebras);
    read_block("edges", inst.edge_algebras);
    read_block("incidences", inst.incidence_algebras);
    return inst;
  }
  throw input_error("realisation: unknown kind \"" + kind + "\"");
}

ColouringInstance parse_colouring(const ojson& j) {
  expect_keys(j, {"kind", "n", "graph", "colouring"}, {}, "instance");
  ColouringInstance inst;
  inst.n = int_field(j, "n", "instance");
  inst.graph = hypergraph_from_json(j.at("graph"));
  require(j.at("colouring").is_object(), "colouring must map vertices to colours");
  for (const auto& [key, val] : j.at("colouring").items()) {
    require(val.is_number_integer(), "colouring." + key + " must be an integer");
    inst.colouring[key] = val.get<int>();
  }
  return inst;
}

TensorInstance parse_tensor(const ojson& j) {
  expect_keys(j, {"kind", "gamma", "lambda"}, {}, "instance");
  TensorInstance inst;
  inst.gamma = hypergraph_from_json(j.at("gamma"));
  inst.lambda = hypergraph_from_json(j.at("lambda"));
  return inst;
}

} // namespace

ParsedInstance parse_instance(const ojson& j) {
  require(j.is_object(), "instance: expected an object");
  if (j.contains("kind")) {
    std::string kind = string_field(j, "kind", "instance");
    if (kind == "colouring") return parse_colouring(j);
    if (kind == "tensor") return parse_tensor(j);
    throw input_error("instance: unknown kind \"" + kind + "\"");
  }
  expect_keys(j, {"group", "hypergraph", "realisation"}, {}, "instance");
  GroupSpec group = parse_group(field(j, "group"));
  Instance inst;
  inst.hypergraph = hypergraph_from_json(field(j, "hypergraph"));
  inst.payload = parse_realisation(field(j, "realisation"), group);
  return inst;
}

ParsedInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open instance file: " + path);
  ojson j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("malformed JSON in " + path + ": " + e.what());
  }
  return parse_instance(j);
}

ojson instance_to_json(const Instance& inst) {
  ojson j;
  j["group"] = group_to_json(model_of(inst));
  j["hypergraph"] = hypergraph_to_json(inst.hypergraph);

  ojson r;
  struct Visitor {
    ojson& r;
    void operator()(const BarJointInstance& b) const {
      r["kind"] = "bar_joint";
      ojson coords;
      for (const auto& [v, p] : b.coordinates) {
        ojson arr = ojson::array();
        for (const auto& x : p) arr.push_back(rat_to_json(x));
        coords[v] = std::move(arr);
      }
      r["coordinates"] = std::move(coords);
    }
    void operator()(const ProjectiveInstance& p) const {
      r["kind"] = "projective";
      r["k"] = p.k;
      r["l"] = p.l;
      ojson vs, es;
      for (const auto& [v, m] : p.vertex_subspaces) vs[v] = matrix_to_json(m);
      for (const auto& [e, m] : p.edge_subspaces) es[e] = matrix_to_json(m);
      r["vertex_subspaces"] = std::move(vs);
      r["edge_subspaces"] = std::move(es);
    }
    void operator()(const SceneInstance& s) const {
      r["kind"] = "scene";
      ojson pts;
      for (const auto& [v, p] : s.points) {
        ojson arr = ojson::array();
        for (const auto& x : p) arr.push_back(rat_to_json(x));
        pts[v] = std::move(arr);
      }
      r["points"] = std::move(pts);
    }
    void operator()(const ParallelInstance& p) const {
      r["kind"] = "parallel";
      ojson pts;
      for (const auto& [v, q] : p.points) {
        ojson arr = ojson::array();
        for (const auto& x : q) arr.push_back(rat_to_json(x));
        pts[v] = std::move(arr);
      }
      r["points"] = std::move(pts);
      ojson hps;
      for (const auto& [e, hp] : p.hyperplanes) {
        ojson one;
        ojson normal = ojson::array();
        for (const auto& x : hp.normal) normal.push_back(rat_to_json(x));
        one["normal"] = std::move(normal);
        one["offset"] = rat_to_json(hp.offset);
        hps[e] = std::move(one);
      }
      r["hyperplanes"] = std::move(hps);
    }
    void operator()(const ConstrainedInstance& c) const {
      r["kind"] = "constrained";
      ojson coords;
      for (const auto& [v, p] : c.coordinates) {
        ojson arr = ojson::array();
        for (const auto& x : p) arr.push_back(rat_to_json(x));
        coords[v] = std::move(arr);
      }
      r["coordinates"] = std::move(coords);
      ojson cons;
      for (const auto& [v, space] : c.constraints) {
        ojson one;
        ojson base = ojson::array();
        for (const auto& x : space.base) base.push_back(rat_to_json(x));
        one["point"] = std::move(base);
        one["directions"] = matrix_to_json(space.directions);
        cons[v] = std::move(one);
      }
      r["constraints"] = std::move(cons);
    }
    void operator()(const CustomInstance& c) const {
      r["kind"] = "custom";
      ojson algebras;
      auto write_block = [&](const char* name,
                             const std::map<std::string, std::vector<Mat>>& source) {
        if (source.empty()) return;
        ojson block;
        for (const auto& [key, gens] : source) {
          ojson arr = ojson::array();
          for (const Mat& g : gens) arr.push_back(matrix_to_json(g));
          block[key] = std::move(arr);
        }
        algebras[name] = std::move(block);
      };
      write_block("vertices", c.vertex_algebras);
      write_block("edges", c.edge_algebras);
      write_block("incidences", c.incidence_algebras);
      r["algebras"] = std::move(algebras);
    }
  };
  std::visit(Visitor{r}, inst.payload);
  j["realisation"] = std::move(r);
  return j;
}

ojson motion_report_to_json(const MotionReport& rep, const Realisation* names) {
  ojson j;
  j["dim_A"] = rep.dim_A;
  j["dim_kernel_pi"] = rep.dim_kernel_pi;
  j["dim_piA"] = rep.dim_piA;
  j["dim_trivial"] = rep.dim_trivial;
  j["dofs"] = rep.dofs;
  j["rigid"] = rep.rigid;
  if (rep.basis && names) {
    ojson basis = ojson::array();
    for (const auto& tuple : *rep.basis) {
      ojson entry;
      for (std::size_t t = 0; t < tuple.size(); ++t)
        entry[names->element_name(t)] = matrix_to_json(tuple[t]);
      basis.push_back(std::move(entry));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

ojson constrained_report_to_json(const ConstrainedReport& rep) {
  ojson j;
  j["mode"] = "constrained";
  j["dim_A"] = rep.dim_A;
  j["dim_kernel_cap_A"] = rep.dim_kernel_cap_A;
  j["dim_piA"] = rep.dim_piA;
  j["lower_bound"] = rep.lower_bound;
  return j;
}

ojson maxwell_to_json(const MaxwellBound& b) {
  ojson j;
  j["bound"] = b.bound;
  if (b.profile) {
    ojson p;
    p["k1"] = b.profile->k1;
    p["k2"] = b.profile->k2;
    p["lambda"] = b.profile->lambda;
    j["profile"] = std::move(p);
    j["closed_form"] = *b.closed_form;
  }
  return j;
}

ojson sparsity_scan_to_json(const SparsityScan& s) {
  ojson j;
  j["applicable"] = s.applicable;
  if (!s.applicable) return j;
  j["global_equality"] = s.global_equality;
  ojson p;
  p["k1"] = s.profile.k1;
  p["k2"] = s.profile.k2;
  p["lambda"] = s.profile.lambda;
  j["profile"] = std::move(p);
  if (!s.global_equality) return j;
  j["checked"] = s.checked;
  j["skipped"] = s.skipped;
  ojson viol = ojson::array();
  for (const auto& v : s.violations) {
    ojson one;
    one["subset"] = v.subset;
    one["lhs"] = v.lhs;
    one["rhs"] = v.rhs;
    viol.push_back(std::move(one));
  }
  j["violations"] = std::move(viol);
  return j;
}

ojson banana_to_json(const BananaResult& b, const Realisation& r) {
  ojson j;
  switch (b.status) {
    case BananaResult::Status::certificate: j["status"] = "certificate"; break;
    case BananaResult::Status::not_disconnecting: j["status"] = "not_disconnecting"; break;
    case BananaResult::Status::no_witness: j["status"] = "no_witness"; break;
    case BananaResult::Status::inconclusive: j["status"] = "inconclusive"; break;
  }
  if (!b.reason.empty()) j["reason"] = b.reason;
  if (b.certificate) {
    ojson c;
    c["cut"] = b.certificate->cut;
    c["witness_dim"] = b.certificate->witness_dim;
    c["witness"] = matrix_to_json(b.certificate->witness);
    ojson tuple;
    for (std::size_t t = 0; t < b.certificate->tuple.size(); ++t)
      tuple[r.element_name(t)] = matrix_to_json(b.certificate->tuple[t]);
    c["tuple"] = std::move(tuple);
    j["certificate"] = std::move(c);
  }
  return j;
}

} // namespace gog
