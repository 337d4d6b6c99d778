#include <ckindex/aps_index.hpp>

#include <ckindex/errors.hpp>
#include <ckindex/generators.hpp>

namespace ckindex {

namespace {

struct Job {
  LabeledElement gen;
  std::string kind;
  std::optional<Path> path;
};

// sum_{i=1..d} n^{-i} = (n^d - 1) / ((n - 1) n^d) for n >= 2.
Rational path_index_closed_form(const Integer& n, std::size_t d) {
  Rational total = 0;
  Integer den = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    den *= n;
    total += Rational(1, den);
  }
  total.canonicalize();
  return total;
}

}  // namespace

CrosscheckReport pairing_crosscheck(const GraphPtr& g, std::size_t horizon, Execution exec) {
  require_no_sinks_no_sources(*g, "pairing crosscheck");
  const AFCore core(g);

  std::vector<Job> jobs;
  for (auto& e : edge_generators(g, horizon)) jobs.push_back({std::move(e), "edge", std::nullopt});
  for (std::size_t len = 1; len <= horizon; ++len)
    for (const Path& mu : enumerate_paths(*g, len)) {
      const Path bar = mu.shifted(*g, 1);
      jobs.push_back({{"S(" + mu.to_string(*g) + ")*adj(S(" + bar.to_string(*g) + "))",
                       Element::word(g, mu, bar)},
                      "shifted",
                      mu});
    }
  for (std::size_t len = 1; len <= horizon; ++len)
    for (const Path& mu : enumerate_paths(*g, len))
      jobs.push_back({{"S(" + mu.to_string(*g) + ")", Element::path(g, mu)}, "path", mu});

  auto entries = indexed_map<CrosscheckEntry>(
      jobs.size(),
      [&](std::size_t i) {
        const Job& job = jobs[i];
        CrosscheckEntry e{job.gen.label, job.kind,
                          pairing(core, AdmissibleIsometry::single(job.gen.element)), std::nullopt,
                          std::nullopt};
        if (job.kind == "shifted")
          e.matches_path_projection = core.equal(
              e.report.odd_route, core.graded_class_unchecked(Element::path_projection(g, *job.path), 0));
        if (job.kind == "path" && core.rank() == 1)
          e.matches_closed_form =
              core.as_rational(e.report.odd_route) ==
              std::optional<Rational>(path_index_closed_form(core.connecting_map()(0, 0), job.path->length()));
        return e;
      },
      exec);

  CrosscheckReport rep;
  rep.horizon = horizon;
  rep.all_agree = rep.all_projection_checks = rep.all_closed_forms = true;
  for (const auto& e : entries) {
    if (!e.report.agree) {
      rep.all_agree = false;
      rep.failures.push_back(e.generator + ": routes disagree");
    }
    if (e.matches_path_projection == false) {
      rep.all_projection_checks = false;
      rep.failures.push_back(e.generator + ": Index != [p_mu]");
    }
    if (e.matches_closed_form == false) {
      rep.all_closed_forms = false;
      rep.failures.push_back(e.generator + ": closed form mismatch");
    }
  }
  rep.entries = std::move(entries);
  return rep;
}

}  // namespace ckindex
