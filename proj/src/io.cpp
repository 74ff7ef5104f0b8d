#include "fanowalls/io.hpp"

#include <string>
#include <vector>

namespace fanowalls {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw ParseError("rational must be a string or an integer");
}

Json context_json(FanoContext ctx) { return {{"index", ctx.index()}, {"degree", ctx.degree()}}; }

FanoContext context_from_json(const Json& j) {
  return json_guard("context", [&] {
    return FanoContext::make(j.at("index").get<int>(), j.at("degree").get<int>());
  });
}

Json chern_json(const ChernCharacter& ch) {
  return {{"ctx", context_json(ch.ctx)},
          {"ch", Json::array({rational_json(ch.r), rational_json(ch.c), rational_json(ch.m),
                              rational_json(ch.n)})}};
}

ChernCharacter chern_from_json(const Json& j) {
  return json_guard("class", [&] {
    const Json& v = j.at("ch");
    if (!v.is_array() || v.size() != 4) throw ParseError("\"ch\" must have four entries");
    return ChernCharacter(context_from_json(j.at("ctx")), rational_from_json(v[0]),
                          rational_from_json(v[1]), rational_from_json(v[2]),
                          rational_from_json(v[3]));
  });
}

Json ku_class_json(FanoContext ctx, KuClass u) {
  return {{"lattice", context_json(ctx)}, {"class", Json::array({u.a, u.b})}};
}

std::pair<FanoContext, KuClass> ku_class_from_json(const Json& j) {
  return json_guard("lattice class", [&] {
    const Json& v = j.at("class");
    if (!v.is_array() || v.size() != 2) throw ParseError("\"class\" must have two entries");
    return std::make_pair(context_from_json(j.at("lattice")),
                          KuClass{v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
  });
}

Json locus_json(const WallLocus& locus) {
  struct Visitor {
    Json operator()(const EmptyLocus&) const { return {{"kind", "empty"}}; }
    Json operator()(const Everywhere&) const { return {{"kind", "everywhere"}}; }
    Json operator()(const VerticalLine& v) const {
      return {{"kind", "vertical"}, {"beta", rational_json(v.beta)}};
    }
    Json operator()(const Semicircle& s) const {
      return {{"kind", "semicircle"},
              {"center", rational_json(s.center)},
              {"radius_sq", rational_json(s.radius_sq)}};
    }
  };
  return std::visit(Visitor{}, locus);
}

WallLocus locus_from_json(const Json& j) {
  return json_guard("locus", [&]() -> WallLocus {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return EmptyLocus{};
    if (kind == "everywhere") return Everywhere{};
    if (kind == "vertical") return VerticalLine{rational_from_json(j.at("beta"))};
    if (kind == "semicircle") {
      return Semicircle{rational_from_json(j.at("center")), rational_from_json(j.at("radius_sq"))};
    }
    throw ParseError("unknown locus kind \"" + kind + "\"");
  });
}

Json candidate_json(const WallCandidate& cand) {
  return {{"params", Json::array({rational_json(cand.params.a), rational_json(cand.params.b),
                                  rational_json(cand.params.c)})},
          {"sub", chern_json(cand.sub)},
          {"quot", chern_json(cand.quot)},
          {"beta", rational_json(cand.beta)},
          {"t", cand.t ? rational_json(*cand.t) : Json("ray")},
          {"locus", locus_json(cand.locus)}};
}

WallCandidate candidate_from_json(const Json& j) {
  return json_guard("candidate", [&] {
    const Json& p = j.at("params");
    if (!p.is_array() || p.size() != 3) throw ParseError("\"params\" must have three entries");
    std::optional<Rational> t;
    if (!(j.at("t").is_string() && j.at("t").get<std::string>() == "ray")) {
      t = rational_from_json(j.at("t"));
    }
    return WallCandidate{chern_from_json(j.at("sub")),
                         chern_from_json(j.at("quot")),
                         {rational_from_json(p[0]), rational_from_json(p[1]),
                          rational_from_json(p[2])},
                         rational_from_json(j.at("beta")),
                         t,
                         locus_from_json(j.at("locus"))};
  });
}

Json destabilizer_json(const DestabilizerHit& hit) {
  return {{"a", hit.a},
          {"b", hit.b},
          {"c", hit.c},
          {"g", chern_json(hit.g)},
          {"case", hit.case_id},
          {"survives", hit.survives},
          {"verdict", hit.verdict}};
}

ChernCharacter parse_class(FanoContext ctx, std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() > 4) throw ParseError("class has more than four entries: " + std::string(text));
  std::array<Rational, 4> v{0, 0, 0, 0};
  for (std::size_t i = 0; i < parts.size(); ++i) v[i] = parse_rational(parts[i]);
  return {ctx, v[0], v[1], v[2], v[3]};
}

KuClass parse_ku_class(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw ParseError("lattice class must be \"a,b\": " + std::string(text));
  const Rational a = parse_rational(parts[0]);
  const Rational b = parse_rational(parts[1]);
  if (!is_integer(a) || !is_integer(b)) throw ParseError("lattice coordinates must be integers");
  return {to_int64(a), to_int64(b)};
}

}  // namespace fanowalls
