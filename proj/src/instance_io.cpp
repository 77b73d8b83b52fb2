#include "bqcp/instance_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace bqcp {

using Json = nlohmann::ordered_json;

namespace {

double number_from(const Json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      size_t pos = 0;
      double v = std::stod(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return v;
    } catch (...) {
    }
  }
  throw ParseError("expected a number for " + what);
}

Vector vector_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("expected an array for " + what);
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[int(i)] = number_from(j[i], what);
  return v;
}

Matrix matrix_from(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError("expected an array of rows for " + what);
  const int rows = int(j.size());
  int cols = -1;
  Matrix m;
  for (int i = 0; i < rows; ++i) {
    Vector row = vector_from(j[i], what);
    if (cols < 0) {
      cols = int(row.size());
      m.resize(rows, cols);
    } else if (int(row.size()) != cols) {
      throw ParseError("ragged rows in " + what);
    }
    m.row(i) = row.transpose();
  }
  if (rows == 0) m.resize(0, 0);
  return m;
}

Json vector_to(const Vector& v) {
  Json j = Json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Json matrix_to(const Matrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) j.push_back(vector_to(m.row(i).transpose()));
  return j;
}

ObjectiveSpec objective_from(const Json& j, int n) {
  if (!j.is_object() || !j.contains("type"))
    throw ParseError("objective must be an object with a type");
  ObjectiveSpec obj;
  const std::string type = j.at("type").get<std::string>();
  if (type == "linear") {
    obj.kind = ObjectiveSpec::Kind::Linear;
    obj.u = vector_from(j.at("u"), "objective.u");
  } else if (type == "coverage") {
    obj.kind = ObjectiveSpec::Kind::Coverage;
    obj.weights = vector_from(j.at("weights"), "objective.weights");
    for (const auto& set : j.at("sets")) {
      std::vector<int> elems;
      for (const auto& e : set) elems.push_back(e.get<int>());
      obj.covers.push_back(std::move(elems));
    }
  } else if (type == "quadratic") {
    obj.kind = ObjectiveSpec::Kind::Quadratic;
    obj.Q = matrix_from(j.at("Q"), "objective.Q");
    obj.q = j.contains("q") ? vector_from(j.at("q"), "objective.q")
                            : Vector(Vector::Zero(n));
    if (j.contains("U")) obj.factor = matrix_from(j.at("U"), "objective.U");
  } else if (type == "product") {
    obj.kind = ObjectiveSpec::Kind::Product;
    for (const auto& a : j.at("vectors"))
      obj.vectors.push_back(vector_from(a, "objective.vectors"));
  } else if (type == "sum_ratio") {
    obj.kind = ObjectiveSpec::Kind::SumRatio;
    for (const auto& a : j.at("numerators"))
      obj.numerators.push_back(vector_from(a, "objective.numerators"));
    for (const auto& b : j.at("denominators"))
      obj.denominators.push_back(vector_from(b, "objective.denominators"));
  } else {
    throw ParseError("unknown objective type: " + type);
  }
  return obj;
}

Json objective_to(const ObjectiveSpec& obj) {
  Json j;
  switch (obj.kind) {
    case ObjectiveSpec::Kind::Linear:
      j["type"] = "linear";
      j["u"] = vector_to(obj.u);
      break;
    case ObjectiveSpec::Kind::Coverage: {
      j["type"] = "coverage";
      j["weights"] = vector_to(obj.weights);
      Json sets = Json::array();
      for (const auto& set : obj.covers) sets.push_back(set);
      j["sets"] = sets;
      break;
    }
    case ObjectiveSpec::Kind::Quadratic:
      j["type"] = "quadratic";
      j["Q"] = matrix_to(obj.Q);
      j["q"] = vector_to(obj.q);
      if (obj.factor) j["U"] = matrix_to(*obj.factor);
      break;
    case ObjectiveSpec::Kind::Product: {
      j["type"] = "product";
      Json vs = Json::array();
      for (const auto& a : obj.vectors) vs.push_back(vector_to(a));
      j["vectors"] = vs;
      break;
    }
    case ObjectiveSpec::Kind::SumRatio: {
      j["type"] = "sum_ratio";
      Json nums = Json::array(), dens = Json::array();
      for (const auto& a : obj.numerators) nums.push_back(vector_to(a));
      for (const auto& b : obj.denominators) dens.push_back(vector_to(b));
      j["numerators"] = nums;
      j["denominators"] = dens;
      break;
    }
  }
  return j;
}

}  // namespace

ProblemInstance parse_instance(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  ProblemInstance inst;
  try {
    inst.n = j.at("n").get<int>();
    const std::string sense = j.at("sense").get<std::string>();
    if (sense == "pack")
      inst.sense = Sense::Pack;
    else if (sense == "cover")
      inst.sense = Sense::Cover;
    else
      throw ParseError("unknown sense: " + sense);
    inst.objective = objective_from(j.at("objective"), inst.n);
    for (const auto& cj : j.at("constraints")) {
      QuadraticConstraint c;
      c.Q = matrix_from(cj.at("Q"), "constraint.Q");
      c.capacity = number_from(cj.at("C"), "constraint.C");
      if (cj.contains("U")) c.factor = matrix_from(cj.at("U"), "constraint.U");
      if (cj.contains("q")) c.linear = vector_from(cj.at("q"), "constraint.q");
      if (cj.contains("residual_tol"))
        c.residual_tol = number_from(cj.at("residual_tol"), "residual_tol");
      inst.constraints.push_back(std::move(c));
    }
    if (j.contains("linear")) {
      LinearSystem sys;
      sys.A = matrix_from(j.at("linear").at("A"), "linear.A");
      sys.b = vector_from(j.at("linear").at("b"), "linear.b");
      inst.linear = std::move(sys);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("missing or mistyped field: ") + e.what());
  }
  validate(inst);
  return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
  Json j;
  j["n"] = inst.n;
  j["sense"] = inst.sense == Sense::Pack ? "pack" : "cover";
  j["objective"] = objective_to(inst.objective);
  Json cs = Json::array();
  for (const auto& c : inst.constraints) {
    Json cj;
    cj["Q"] = matrix_to(c.Q);
    cj["C"] = c.capacity;
    if (c.factor) cj["U"] = matrix_to(*c.factor);
    if (c.linear.size() > 0) cj["q"] = vector_to(c.linear);
    if (c.residual_tol != 1e-8) cj["residual_tol"] = c.residual_tol;
    cs.push_back(cj);
  }
  j["constraints"] = cs;
  if (inst.linear) {
    Json lj;
    lj["A"] = matrix_to(inst.linear->A);
    lj["b"] = vector_to(inst.linear->b);
    j["linear"] = lj;
  }
  return j.dump(2) + "\n";
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

void save_instance(const ProblemInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_instance(inst);
}

}  // namespace bqcp
