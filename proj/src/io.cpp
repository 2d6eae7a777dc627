#include "tfg/io.hpp"

#include "tfg/errors.hpp"

#include <fstream>
#include <sstream>

namespace tfg {

namespace {

std::vector<int> index_array(const Json& j, int order, const char* what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(order))
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(order) + " indices");
  std::vector<int> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    int v = x.get<int>();
    if (v < 0 || v >= order) throw ParseError(std::string(what) + " entry " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  return out;
}

int element(const Json& j, const FiniteGroup& g, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an element index");
  int v = j.get<int>();
  if (v < 0 || v >= g.order()) throw ParseError(std::string(what) + " out of range");
  return v;
}

Triple triple_fields(const Json& j) {
  if (!j.is_object()) throw ParseError("triple file must hold a JSON object");
  if (j.contains("fixture")) return fixture(j.at("fixture").get<std::string>());
  if (!j.contains("group") || !j.contains("a0") || !j.contains("a1"))
    throw ParseError("triple file needs group, a0 and a1");
  const Json& gj = j.at("group");
  if (!gj.contains("order") || !gj.contains("mul")) throw ParseError("group needs order and mul");
  int n = gj.at("order").get<int>();
  if (n < 1) throw ParseError("group order must be positive");
  const Json& mj = gj.at("mul");
  if (!mj.is_array() || mj.size() != static_cast<std::size_t>(n)) throw ParseError("mul must have one row per element");
  std::vector<std::vector<int>> mul;
  for (const Json& row : mj) mul.push_back(index_array(row, n, "mul row"));
  std::vector<std::string> names;
  if (gj.contains("names")) names = gj.at("names").get<std::vector<std::string>>();
  auto g = std::make_shared<const FiniteGroup>(std::move(mul), std::move(names));
  GroupMap a0{g, g, index_array(j.at("a0"), n, "a0")};
  GroupMap a1{g, g, index_array(j.at("a1"), n, "a1")};
  return Triple(g, std::move(a0), std::move(a1));
}

}  // namespace

Triple triple_from_json(const Json& j) {
  try {
    return triple_fields(j);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json triple_to_json(const Triple& t) {
  Json g;
  g["order"] = t.grp().order();
  g["mul"] = t.grp().table();
  if (!t.grp().names().empty()) g["names"] = t.grp().names();
  Json j;
  j["group"] = g;
  j["a0"] = t.a(0).image;
  j["a1"] = t.a(1).image;
  return j;
}

Triple load_triple(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return triple_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Quadruple quadruple_from_json(const Json& j, const Triple& t) {
  Quadruple q;
  try {
    if (j.contains("zeta")) q.zeta = element(j.at("zeta"), t.grp(), "zeta");
    if (j.contains("phi")) q.phi = NormalizerElement::parse(j.at("phi").get<std::string>());
    if (j.contains("beta")) {
      q.beta = index_array(j.at("beta"), t.grp().order(), "beta");
      GroupMap b{t.group(), t.group(), q.beta};
      if (!b.is_hom() || !b.is_automorphism()) throw ParseError("beta is not an automorphism");
    }
    if (j.contains("f")) {
      const Json& f = j.at("f");
      if (f.is_string()) {
        q.f = NormalizerMap::of_loop(loop_parse(f.get<std::string>(), t.grp()));
      } else if (f.contains("digit_sum")) {
        q.f = NormalizerMap::digit_sum(element(f.at("digit_sum"), t.grp(), "digit_sum"));
      } else if (f.contains("zeta_gamma")) {
        const Json& z = f.at("zeta_gamma");
        q.f = NormalizerMap::zeta_gamma(element(z.at("zeta"), t.grp(), "zeta_gamma.zeta"),
                                        NormalizerElement::parse(z.at("phi").get<std::string>()));
      } else {
        throw ParseError("f must be a loop string, digit_sum or zeta_gamma");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quadruple: ") + e.what());
  }
  return q;
}

Json quadruple_to_json(const Quadruple& q) {
  Json j;
  j["zeta"] = q.zeta;
  switch (q.f.kind) {
    case NormalizerMap::Kind::Loop: j["f"] = loop_str(q.f.loop); break;
    case NormalizerMap::Kind::DigitSum: j["f"] = Json{{"digit_sum", q.f.zeta}}; break;
    case NormalizerMap::Kind::ZetaGamma:
      j["f"] = Json{{"zeta_gamma", Json{{"zeta", q.f.zeta}, {"phi", q.f.phi.str()}}}};
      break;
  }
  j["phi"] = q.phi.str();
  j["beta"] = q.beta;
  return j;
}

Json witness_to_json(const IsoWitness& w) {
  Json j;
  j["beta"] = w.beta.image;
  j["sigma"] = w.swap ? "swap" : "id";
  j["h0"] = w.h0;
  j["h1"] = w.h1;
  return j;
}

Json decision_to_json(const Decision& d) {
  Json j;
  j["verdict"] = verdict_str(d.verdict);
  if (d.witness) j["witness"] = witness_to_json(*d.witness);
  else if (d.beta) j["beta"] = d.beta->image;
  j["reason"] = d.reason;
  return j;
}

}  // namespace tfg
