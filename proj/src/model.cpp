#include "ndq/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace ndq {

namespace {

constexpr std::size_t kTermsPerLine = 8;

void append_terms(std::string& out, const std::string& head,
                  const std::vector<std::string>& terms, const std::string& tail) {
  out += head;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += terms[i];
    } else if (i % kTermsPerLine == 0) {
      out += "\n   + " + terms[i];
    } else {
      out += " + " + terms[i];
    }
  }
  out += tail;
  out += "\n";
}

}  // namespace

std::string_view variant_kind_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::Base: return "base";
    case VariantKind::Cube: return "cube";
    case VariantKind::Star: return "star";
    case VariantKind::CubeStar: return "cs";
    case VariantKind::All: return "all";
  }
  return "?";
}

std::map<std::string, std::size_t> model_stats(const IpModel& model) {
  std::map<std::string, std::size_t> stats;
  for (const Inequality& c : model.constraints)
    ++stats[std::string(ineq_kind_name(c.kind))];
  if (model.cardinality) ++stats["card"];
  return stats;
}

IpModel build(const BoardSpec& spec, const Variant& variant, const KnownValues& known) {
  IpModel model{spec};

  for (const AttackLine& line : enumerate_lines(spec)) {
    Inequality ineq{IneqKind::Line, line.squares, 1};
    std::sort(ineq.squares.begin(), ineq.squares.end());
    model.constraints.push_back(std::move(ineq));
  }

  std::vector<int> hs = variant.h_values;
  if (hs.empty())
    for (int h = 1; h <= spec.n - 1; ++h) hs.push_back(h);

  const bool want_cube = variant.kind == VariantKind::Cube ||
                         variant.kind == VariantKind::CubeStar ||
                         variant.kind == VariantKind::All;
  const bool want_star = variant.kind == VariantKind::Star ||
                         variant.kind == VariantKind::CubeStar ||
                         variant.kind == VariantKind::All;

  if (want_cube)
    for (int h : hs)
      for (Inequality& ineq : cube_cliques(spec, h))
        model.constraints.push_back(std::move(ineq));
  if (want_star)
    for (int h : hs)
      for (Inequality& ineq : star_cliques(spec, h))
        model.constraints.push_back(std::move(ineq));

  if (variant.kind == VariantKind::All) {
    if (spec.d >= 2)
      for (Inequality& ineq : layer_ineqs(spec, known, /*recursive=*/true))
        model.constraints.push_back(std::move(ineq));
    for (int m = 2; m < spec.n; ++m) {
      if (!known.has_exact(m, spec.d)) continue;
      for (Inequality& ineq : subsolution_ineqs(spec, m, known))
        model.constraints.push_back(std::move(ineq));
    }
  }

  if (variant.infeasibility_at) {
    if (*variant.infeasibility_at < 1)
      throw std::invalid_argument("feasibility cardinality must be >= 1");
    model.objective = Objective::FeasibilityOnly;
    model.cardinality = *variant.infeasibility_at;
  }

  if (variant.warmstart) {
    if (variant.warmstart->spec != spec)
      throw std::invalid_argument("warmstart certificate is for a different board");
    model.warmstart = variant.warmstart;
  }
  return model;
}

std::string var_name(const BoardSpec& spec, SquareIndex s) {
  std::string name = "x";
  for (int c : index_to_coord(spec, s)) name += "_" + std::to_string(c);
  return name;
}

std::string emit_lp(const IpModel& model) {
  const BoardSpec& spec = model.spec;
  const std::uint64_t total = spec.square_count();
  std::vector<std::string> names;
  names.reserve(total);
  for (SquareIndex s = 0; s < total; ++s) names.push_back(var_name(spec, s));

  std::string out;
  out += "Maximize\n";
  if (model.objective == Objective::MaximizeCount) {
    append_terms(out, " obj: ", names, "");
  } else {
    out += " obj: 0\n";
  }

  out += "Subject To\n";
  std::map<IneqKind, std::size_t> counters;
  std::vector<std::string> terms;
  for (const Inequality& c : model.constraints) {
    const std::size_t idx = counters[c.kind]++;
    terms.clear();
    for (SquareIndex s : c.squares) terms.push_back(names[s]);
    append_terms(out,
                 " " + std::string(ineq_kind_name(c.kind)) + "_" + std::to_string(idx) +
                     ": ",
                 terms, " <= " + std::to_string(c.rhs));
  }
  if (model.cardinality) {
    append_terms(out, " card_0: ", names, " = " + std::to_string(*model.cardinality));
  }

  out += "Binaries\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i % kTermsPerLine == 0) ? (i ? "\n " : " ") : " ";
    out += names[i];
  }
  out += "\nEnd\n";
  return out;
}

std::string emit_dimacs(const BoardSpec& spec) {
  const std::uint64_t total = spec.square_count();
  std::string edges;
  std::uint64_t edge_count = 0;
  for (SquareIndex v = 0; v < total; ++v) {
    for (SquareIndex u : attack_neighbors(spec, v)) {
      if (u <= v) continue;
      edges += "e " + std::to_string(v + 1) + " " + std::to_string(u + 1) + "\n";
      ++edge_count;
    }
  }
  return "p edge " + std::to_string(total) + " " + std::to_string(edge_count) + "\n" +
         edges;
}

std::string emit_warmstart(const IpModel& model) {
  if (!model.warmstart)
    throw std::invalid_argument("model has no warmstart attached");
  const Placement& p = *model.warmstart;
  if (p.spec != model.spec)
    throw std::invalid_argument("warmstart certificate is for a different board");
  VerifyResult check = verify(p);
  if (!check.ok()) {
    const Conflict& c = check.conflicts.front();
    throw std::invalid_argument("warmstart certificate has attacking queens " +
                                var_name(p.spec, c.a) + " and " +
                                var_name(p.spec, c.b));
  }
  std::string out;
  for (SquareIndex q : p.queens) out += var_name(model.spec, q) + " 1\n";
  return out;
}

}  // namespace ndq
