#include "query.hpp"

#include <filesystem>

#include "ar.hpp"
#include "error.hpp"
#include "json.hpp"

namespace hsg {

namespace {

int vertex_of(const Quiver& q, const std::string& spec) { return q.vertex_from_name(spec.substr(1)); }

bool is_index(const std::string& s) {
  return s.size() > 1 && s.find_first_not_of("0123456789", 1) == std::string::npos;
}

nlohmann::ordered_json describe(const Representation& m, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["label"] = module_label(m, seed);
  j["dims"] = m.dims();
  j["module"] = m.to_text();
  return j;
}

}  // namespace

Representation resolve_module(QuiverPtr q, const std::string& spec, PrimeField field) {
  if (spec.empty()) fail(ErrorCode::invalid_argument, "empty module specification");
  if (is_index(spec) && !std::filesystem::exists(spec)) {
    switch (spec[0]) {
      case 'P': return projective(q, vertex_of(*q, spec), field);
      case 'I': return injective(q, vertex_of(*q, spec), field);
      case 'S': return simple(q, vertex_of(*q, spec), field);
      case 'K': {
        auto all = knit_indecomposables(q, field);
        std::size_t n = std::stoul(spec.substr(1));
        if (n == 0 || n > all.size())
          fail(ErrorCode::unknown_object, "no knitted indecomposable " + spec + " (there are " + std::to_string(all.size()) + ")");
        return all[n - 1];
      }
      default: break;
    }
  }
  return load_module(std::move(q), spec, field);
}

std::string module_label(const Representation& m, std::uint64_t seed) {
  if (m.is_zero()) return "0";
  QuiverPtr q = m.quiver_ptr();
  const PrimeField& f = m.field();
  for (int v = 0; v < q->vertex_count(); ++v) {
    const std::string name = q->vertex_name(v);
    if (is_isomorphic(m, simple(q, v, f), seed)) return "S" + name;
    if (is_isomorphic(m, projective(q, v, f), seed)) return "P" + name;
    if (is_isomorphic(m, injective(q, v, f), seed)) return "I" + name;
  }
  if (q->classify_graph().type == GraphType::dynkin) {
    auto all = knit_indecomposables(q, f);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (is_isomorphic(m, all[i], seed)) return "K" + std::to_string(i + 1);
  }
  return m.dims_string();
}

std::string run_query(const std::string& kind, QuiverPtr q, PrimeField field, const QueryArgs& args) {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  auto need = [](const std::string& value, const char* flag) {
    if (value.empty()) fail(ErrorCode::invalid_argument, std::string("query needs ") + flag);
    return value;
  };
  if (kind == "hom" || kind == "ext") {
    Representation a = resolve_module(q, need(args.from, "--from"), field);
    Representation b = resolve_module(q, need(args.to, "--to"), field);
    std::size_t d = kind == "hom" ? hom_dimension(a, b) : ext1_dimension(a, b);
    j["from"] = args.from;
    j["to"] = args.to;
    j["dimension"] = d;
    j["text"] = "dim " + std::string(kind == "hom" ? "Hom" : "Ext^1") + "(" + args.from + ", " + args.to + ") = " + std::to_string(d);
  } else if (kind == "tau" || kind == "tau-inverse") {
    Representation m = resolve_module(q, need(args.module, "--module"), field);
    Representation t = kind == "tau" ? tau(m) : tau_inverse(m);
    j["module"] = args.module;
    j["result"] = describe(t, args.seed);
    j["text"] = (kind == "tau" ? "tau(" : "tau^-1(") + args.module + ") = " + module_label(t, args.seed) + " " + t.dims_string();
  } else if (kind == "classify") {
    Representation m = resolve_module(q, need(args.module, "--module"), field);
    ARClass c = classify(m, args.bound, args.seed);
    j["module"] = args.module;
    j["class"] = to_string(c.tag);
    j["certificate"] = c.certificate;
    j["text"] = args.module + " is " + to_string(c.tag) + " (certificate " + std::to_string(c.certificate) + ")";
  } else if (kind == "indec") {
    if (q->classify_graph().type != GraphType::dynkin)
      fail(ErrorCode::not_dynkin, "indec lists indecomposables of Dynkin quivers only");
    auto all = knit_indecomposables(q, field);
    j["count"] = all.size();
    j["entries"] = nlohmann::ordered_json::array();
    std::string text = std::to_string(all.size()) + " indecomposables";
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::string label = module_label(all[i], args.seed);
      j["entries"].push_back({{"index", i + 1}, {"label", label}, {"dims", all[i].dims()}});
      text += "\n  K" + std::to_string(i + 1) + "  " + all[i].dims_string() + "  " + label;
    }
    j["text"] = text;
  } else {
    fail(ErrorCode::invalid_argument, "unknown query kind '" + kind + "'");
  }
  return j.dump(2);
}

}  // namespace hsg
