// Command-line driver: verification suites, Lie algebra inspection, form-file
// census, and fiber-model checks. Exit codes: 0 all checks pass, 1 at least
// one FAIL line, 2 invalid input.

#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "chartwo/enumeration.hpp"
#include "chartwo/fiber.hpp"
#include "chartwo/form_io.hpp"
#include "chartwo/polarization.hpp"
#include "chartwo/suites.hpp"

namespace {

using namespace chartwo;

int run_verify(const std::string& suite, const SuiteOptions& options) {
  Reporter reporter;
  run_suite(suite, options, reporter);
  reporter.print(std::cout);
  return reporter.exit_code();
}

int run_lie(const std::string& group, const std::string& variant_name, int k,
            bool print_basis) {
  const Gf2kField field{k};
  const LieVariant variant = variant_name == "scheme" ? LieVariant::scheme_tangent
                                                      : LieVariant::smooth;
  Reporter reporter;
  if (group == "so8") {
    const auto algebra = lie_algebra(so8_standard_form(field), variant);
    const std::size_t expected = 28;
    reporter.check("lie.so8.dim", algebra.dim() == expected,
                   {{"dim", std::to_string(algebra.dim())},
                    {"variant", variant_name}});
    reporter.check("lie.so8.bracket", algebra.bracket_closed(), {});
    reporter.print(std::cout);
    if (print_basis) {
      for (std::size_t i = 0; i < algebra.dim(); ++i) {
        std::cout << "BASIS " << i << '\n' << algebra.basis_matrix(i).to_string();
      }
    }
  } else {
    const auto algebra = lie_algebra(so7_standard_form(field), variant);
    const std::size_t expected = variant == LieVariant::smooth ? 21 : 22;
    reporter.check("lie.so7.dim", algebra.dim() == expected,
                   {{"dim", std::to_string(algebra.dim())},
                    {"variant", variant_name}});
    reporter.check("lie.so7.bracket", algebra.bracket_closed(), {});
    reporter.print(std::cout);
    if (print_basis) {
      for (std::size_t i = 0; i < algebra.dim(); ++i) {
        std::cout << "BASIS " << i << '\n' << algebra.basis_matrix(i).to_string();
      }
    }
  }
  return reporter.exit_code();
}

int run_census(const std::string& path, bool group_order, int threads) {
  const ParsedForm parsed = parse_form_file(path);
  Reporter reporter;
  std::visit(
      [&](const auto& form) {
        using FormT = std::decay_t<decltype(form)>;
        reporter.info("census.form",
                      {{"file", path},
                       {"field", form.field().name()},
                       {"dim", std::to_string(form.dim())}});
        const auto radical = form.radical();
        reporter.info("census.radical", {{"dim", std::to_string(radical.dim())}});
        reporter.info("census.nondegenerate",
                      {{"value", form.is_nondegenerate() ? "true" : "false"}});
        if constexpr (std::is_same_v<FormT, QuadraticForm<Gf2kField>>) {
          if (form.field().k * static_cast<int>(form.dim()) <= 24) {
            const auto with_zero = count_isotropic_vectors(form, true, threads);
            reporter.info("census.isotropic",
                          {{"count", std::to_string(with_zero)},
                           {"nonzero", std::to_string(with_zero - 1)}});
          }
          if (group_order) {
            const auto e = enumerate_orthogonal_group(form, threads);
            reporter.info("census.group",
                          {{"order", std::to_string(e.order)},
                           {"dickson-zero", std::to_string(e.dickson_zero_order)}});
            reporter.check("census.group.closure", e.closed_under_product, {});
            reporter.check("census.group.dickson-multiplicative",
                           e.dickson_multiplicative, {});
            reporter.check("census.group.det", e.all_det_one, {});
          }
        } else {
          if (group_order) {
            throw std::invalid_argument("census: --group-order needs a gf2^k form");
          }
        }
      },
      parsed);
  reporter.print(std::cout);
  return reporter.exit_code();
}

ModelKind parse_kind(const std::string& name) {
  if (name == "so7") return ModelKind::so7;
  if (name == "so8-hat") return ModelKind::so8_hat;
  if (name == "so8-B") return ModelKind::so8_b;
  throw std::invalid_argument("fiber: unknown kind '" + name + "'");
}

int run_fiber(const std::string& kind_name, int pad, const std::string& check, int k,
              bool perturb_adjoint) {
  const ModelKind kind = parse_kind(kind_name);
  Reporter reporter;
  const bool so7_checks = kind == ModelKind::so7;
  if (!so7_checks &&
      (check == "twist" || check == "involution" || check == "descent")) {
    throw std::invalid_argument("fiber: check '" + check + "' needs --kind so7");
  }

  std::optional<RatFun> scale;
  if (perturb_adjoint) {
    scale = k >= 2 ? RatFun::constant(Gf2k(k, 2)) : RatFun::t(1);
  }

  const auto tag = Reporter::KeyValues{{"kind", kind_name}, {"pad", std::to_string(pad)}};
  if (check == "all") {
    const auto model = build_model(kind, pad, Gf2kField{k});
    reporter.check("fiber.model.nondegenerate", model.form.is_nondegenerate(), tag);
  }
  if (so7_checks && (check == "twist" || check == "involution" || check == "all")) {
    const auto r = verify_twist_identity(k, scale, pad);
    if (check == "twist" || check == "all") {
      Reporter::KeyValues kv = tag;
      if (!r.witness.empty()) kv.emplace_back("witness", r.witness);
      reporter.check("fiber.twist.identity", r.identity_holds, kv);
    }
    if (check == "involution" || check == "all") {
      reporter.check("fiber.gs.involution", r.gs_involution, tag);
    }
  }
  if (so7_checks && (check == "descent" || check == "all")) {
    if (k != 1) throw std::invalid_argument("fiber: descent runs over the k=1 base");
    const auto r = descent_obstruction(1, pad);
    reporter.check("descent.family.identity", r.family_identity,
                   {{"points", std::to_string(r.family_sample_points)}});
    reporter.check("descent.K.no-sqrt-t", r.no_isotropic_graph_over_base, {});
    reporter.check("descent.Kprime.witness",
                   r.lambda_squares_to_t && r.lambda == Tower::s(1),
                   {{"lambda", r.lambda.to_string()}});
    reporter.check("descent.Kprime.isotropic", r.graph_isotropic_over_tower, {});
  }
  if (check == "phi-class" || check == "all") {
    const auto model = build_model(kind, pad, Gf2kField{k});
    const auto r = phi_class_in_quotient(model);
    reporter.check("fiber.phiclass",
                   r.solvable && r.outside_parabolic && r.dline_component_zero,
                   {{"kind", kind_name},
                    {"pad", std::to_string(pad)},
                    {"so-dim", std::to_string(r.so_dim)},
                    {"p-dim", std::to_string(r.p_dim)}});
  }
  reporter.print(std::cout);
  return reporter.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for characteristic-two quadratic forms, orthogonal Lie "
               "algebras and their twisted fiber models"};
  app.require_subcommand(1);

  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  {
    auto suite = std::make_shared<std::string>("all");
    auto options = std::make_shared<SuiteOptions>();
    auto n = std::make_shared<int>(0);
    auto k = std::make_shared<int>(0);
    verify->add_option("--suite", *suite, "suite name")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--n", *n, "restrict the dimension sweep");
    verify->add_option("--k", *k, "restrict the field degree sweep");
    verify->add_option("--seed", options->seed, "seed for randomized sweeps");
    verify->add_option("--threads", options->threads, "shard count for enumerations")
        ->check(CLI::Range(1, 64));
    verify->callback([=, &action] {
      action = [=] {
        SuiteOptions opts = *options;
        if (*n > 0) opts.n = *n;
        if (*k > 0) opts.k = *k;
        return run_verify(*suite, opts);
      };
    });
  }

  // lie
  auto* lie = app.add_subcommand("lie", "compute an orthogonal Lie algebra");
  {
    auto group = std::make_shared<std::string>("so8");
    auto variant = std::make_shared<std::string>("smooth");
    auto k = std::make_shared<int>(1);
    auto print_basis = std::make_shared<bool>(false);
    lie->add_option("--group", *group, "group")->check(CLI::IsMember({"so7", "so8"}));
    lie->add_option("--variant", *variant, "variant")
        ->check(CLI::IsMember({"smooth", "scheme"}));
    lie->add_option("--k", *k, "field degree")->check(CLI::Range(1, 8));
    lie->add_flag("--print-basis", *print_basis, "print the canonical basis");
    lie->callback([=, &action] {
      action = [=] { return run_lie(*group, *variant, *k, *print_basis); };
    });
  }

  // census
  auto* census = app.add_subcommand("census", "inspect a quadratic form file");
  {
    auto path = std::make_shared<std::string>();
    auto group_order = std::make_shared<bool>(false);
    auto threads = std::make_shared<int>(1);
    census->add_option("--form", *path, "form file")->required();
    census->add_flag("--group-order", *group_order,
                     "enumerate the orthogonal group (gf2^1, dim <= 4)");
    census->add_option("--threads", *threads, "shard count")->check(CLI::Range(1, 64));
    census->callback([=, &action] {
      action = [=] { return run_census(*path, *group_order, *threads); };
    });
  }

  // fiber
  auto* fiber = app.add_subcommand("fiber", "check an assembled fiber model");
  {
    auto kind = std::make_shared<std::string>("so7");
    auto pad = std::make_shared<int>(0);
    auto check = std::make_shared<std::string>("all");
    auto k = std::make_shared<int>(1);
    auto perturb = std::make_shared<bool>(false);
    fiber->add_option("--kind", *kind, "model kind")
        ->check(CLI::IsMember({"so7", "so8-hat", "so8-B"}));
    fiber->add_option("--pad", *pad, "hyperbolic padding count")->check(CLI::Range(0, 8));
    fiber->add_option("--check", *check, "which check to run")
        ->check(CLI::IsMember({"twist", "involution", "descent", "phi-class", "all"}));
    fiber->add_option("--k", *k, "base field degree")->check(CLI::Range(1, 8));
    fiber->add_flag("--perturb-adjoint", *perturb,
                    "rescale psi by a non-unit scalar (t, or omega for k >= 2); "
                    "the twist identity is then expected to fail");
    fiber->callback([=, &action] {
      action = [=] { return run_fiber(*kind, *pad, *check, *k, *perturb); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "ERROR " << e.what() << '\n';
    return 2;
  }
}
