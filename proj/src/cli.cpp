#include "alia/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "alia/demo.hpp"
#include "alia/errors.hpp"
#include "alia/fixtures.hpp"
#include "alia/io.hpp"
#include "alia/poly.hpp"
#include "alia/seed.hpp"

namespace alia::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

using Action = std::function<int()>;

AlgebraTable load_algebra(const std::string& p) { return io::algebra_from_json(io::read_file(p)); }
PreAlgebraTable load_pre(const std::string& p) { return io::pre_algebra_from_json(io::read_file(p)); }
Representation load_rep(const std::string& p) { return io::representation_from_json(io::read_file(p)); }
Tensor2 load_tensor2(const std::string& p) { return io::tensor2_from_json(io::read_file(p)); }
BilinearForm load_form(const std::string& p) { return io::form_from_json(io::read_file(p)); }
Matrix load_map(const std::string& p) { return io::linear_map_from_json(io::read_file(p)); }
Comultiplication load_delta(const std::string& p) {
  return io::comultiplication_from_json(io::read_file(p));
}

// Parses `swap:i,j` or a row-major matrix `[[a,b],[c,d]]` of rationals.
Reflection parse_reflection(const std::string& spec, std::size_t nvars) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"') s += c;
  if (s.rfind("swap:", 0) == 0) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("swap needs two indices: swap:i,j");
    std::size_t i = 0;
    std::size_t j = 0;
    try {
      i = std::stoul(s.substr(5, comma - 5));
      j = std::stoul(s.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("bad swap indices in " + spec);
    }
    if (i < 1 || j < 1 || i > nvars || j > nvars)
      throw ParseError("swap indices must lie in 1.." + std::to_string(nvars));
    return Reflection::swap(nvars, i - 1, j - 1);
  }
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
    throw ParseError("reflection must be swap:i,j or [[..],..]");
  std::vector<std::vector<Scalar>> rows;
  std::string body = s.substr(2, s.size() - 4);
  std::size_t start = 0;
  while (true) {
    auto end = body.find("],[", start);
    std::string row = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::vector<Scalar> vals;
    std::size_t p = 0;
    while (true) {
      auto q = row.find(',', p);
      vals.push_back(Scalar::parse(row.substr(p, q == std::string::npos ? std::string::npos : q - p)));
      if (q == std::string::npos) break;
      p = q + 1;
    }
    rows.push_back(std::move(vals));
    if (end == std::string::npos) break;
    start = end + 3;
  }
  Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParseError("reflection matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return Reflection(std::move(m));
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  int report(const Report& r) const {
    if (json)
      out << r.to_json().dump(2) << "\n";
    else
      out << r.to_text();
    return r.pass ? kPass : kFail;
  }

  // Prints the post-hoc verification of a builder's output.
  int verified(const Report& r) const {
    out << "verification:\n" << r.to_text();
    if (!r.pass) err << "error: output failed verification\n";
    return r.pass ? kPass : kFail;
  }

  void wrote(const std::string& path, const io::json& j) const {
    io::write_file(path, j);
    out << "wrote " << path << "\n";
  }
};

void add_checks(CLI::App& app, Ctx& ctx, Action& action) {
  auto* check = app.add_subcommand("check", "Verify an identity or axiom on input files");
  check->require_subcommand(1);
  check->add_flag("--json", ctx.json, "Emit the report as JSON");

  auto single = [&](const char* name, const char* help, std::function<Report(const std::string&)> fn) {
    auto* sc = check->add_subcommand(name, help);
    auto path = std::make_shared<std::string>();
    sc->add_option("file", *path, "Input file")->required();
    sc->add_flag("--json", ctx.json, "Emit the report as JSON");
    sc->callback([&, path, fn] { action = [&ctx, path, fn] { return ctx.report(fn(*path)); }; });
  };
  single("alia", "Symmetric Jacobi identity", [](auto& p) { return check_left_alia(load_algebra(p)); });
  single("lie", "Antisymmetry and Jacobi identity", [](auto& p) { return check_lie(load_algebra(p)); });
  single("pre-alia", "Pre-left-Alia identity", [](auto& p) { return check_pre_left_alia(load_pre(p)); });
  single("zinbiel", "Zinbiel identity", [](auto& p) { return check_zinbiel(load_algebra(p)); });
  single("pre-lie", "Pre-Lie identity", [](auto& p) { return check_pre_lie(load_algebra(p)); });
  single("rep", "Representation axiom", [](auto& p) { return check_representation(load_rep(p)); });
  single("coalgebra", "Dual bracket of a comultiplication is left-Alia",
         [](auto& p) { return check_coalgebra(load_delta(p)); });

  auto pair = [&](const char* name, const char* help, const char* a_flag, const char* a_help,
                  const char* b_flag, const char* b_help,
                  std::function<Report(const std::string&, const std::string&)> fn) {
    auto* sc = check->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sc->add_option(a_flag, *a, a_help)->required();
    sc->add_option(b_flag, *b, b_help)->required();
    sc->add_flag("--json", ctx.json, "Emit the report as JSON");
    sc->callback([&, a, b, fn] { action = [&ctx, a, b, fn] { return ctx.report(fn(*a, *b)); }; });
  };
  pair("bialgebra", "Left-Alia bialgebra axioms", "-a,--algebra", "Algebra file", "-d,--delta",
       "Comultiplication file",
       [](auto& a, auto& d) { return check_bialgebra(load_algebra(a), load_delta(d)); });
  pair("invariance", "Invariance of a bilinear form", "-a,--algebra", "Algebra file", "-b,--form",
       "Form file", [](auto& a, auto& b) { return check_invariance(load_algebra(a), load_form(b)); });
  pair("two-cocycle", "2-cocycle condition", "-a,--algebra", "Algebra file", "-w,--omega", "Form file",
       [](auto& a, auto& w) { return check_two_cocycle(load_algebra(a), load_form(w)); });
  pair("connes", "Connes cocycle on a commutative associative algebra", "-m,--algebra",
       "Algebra file", "-w,--omega", "Form file",
       [](auto& m, auto& w) { return check_connes_cocycle(load_algebra(m), load_form(w)); });
  pair("ybe", "Left-Alia Yang-Baxter equation", "-a,--algebra", "Algebra file", "-r,--r-matrix",
       "Tensor2 file", [](auto& a, auto& r) { return check_ybe(load_algebra(a), load_tensor2(r)); });
  pair("rbo", "Relative Rota-Baxter operator", "-p,--rep", "Representation file", "-t,--map",
       "Linear map V -> A",
       [](auto& p, auto& t) { return check_relative_rbo(RelativeOperator(load_rep(p), load_map(t))); });

  auto* manin = check->add_subcommand("manin", "Manin triple (A, A*, d)");
  auto ma = std::make_shared<std::string>();
  auto ms = std::make_shared<std::string>();
  auto md = std::make_shared<std::string>();
  manin->add_option("-a,--algebra", *ma, "Algebra A")->required();
  manin->add_option("--astar", *ms, "Algebra A*")->required();
  manin->add_option("-d,--double", *md, "Double d")->required();
  manin->add_flag("--json", ctx.json, "Emit the report as JSON");
  manin->callback([&, ma, ms, md] {
    action = [&ctx, ma, ms, md] {
      return ctx.report(check_manin_triple(load_algebra(*ma), load_algebra(*ms), load_algebra(*md)));
    };
  });
}

void add_builds(CLI::App& app, Ctx& ctx, Action& action) {
  auto* build = app.add_subcommand("build", "Construct a structure and verify it");
  build->require_subcommand(1);

  // Options shared by the builders; only the ones a builder declares are used.
  struct Opts {
    std::string in, out, a, astar, r, m, f, g, d, rr, p, t, w, r_out;
  };
  auto o = std::make_shared<Opts>();

  auto opt = [](CLI::App* sc, const char* flag, std::string& dst, const char* help, bool req = true) {
    auto* op = sc->add_option(flag, dst, help);
    if (req) op->required();
  };
  auto sub = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sc = build->add_subcommand(name, help);
    sc->callback([&action, fn] { action = fn; });
    return sc;
  };

  {
    auto* sc = sub("special", "[x,y] = x.f(y) + g(x.y) from a commutative associative algebra", [&ctx, o] {
      AlgebraTable m = load_algebra(o->m);
      AlgebraTable a = special_from_commutative(m, load_map(o->f), load_map(o->g));
      ctx.wrote(o->out, io::to_json(a));
      return ctx.verified(check_left_alia(a));
    });
    opt(sc, "-m,--algebra", o->m, "Commutative associative algebra");
    opt(sc, "-f", o->f, "Linear map f");
    opt(sc, "-g", o->g, "Linear map g");
    opt(sc, "-o,--output", o->out, "Output algebra");
  }
  {
    auto* sc = sub("twisted", "[x,y] = x.D(y) - R(y).D(x) from a twisted derivation", [&ctx, o] {
      AlgebraTable a = bracket_from_twisted_derivation(load_algebra(o->m), load_map(o->d), load_map(o->rr));
      ctx.wrote(o->out, io::to_json(a));
      return ctx.verified(check_left_alia(a));
    });
    opt(sc, "-m,--algebra", o->m, "Commutative associative algebra");
    opt(sc, "-D", o->d, "Twisted derivation D");
    opt(sc, "-R", o->rr, "Companion map R");
    opt(sc, "-o,--output", o->out, "Output algebra");
  }
  {
    auto* sc = sub("semidirect", "Semidirect product of a representation", [&ctx, o] {
      Representation rep = load_rep(o->p);
      if (auto r = check_representation(rep); !r.pass) {
        ctx.out << r.to_text();
        throw PreconditionError("input is not a representation");
      }
      AlgebraTable a = semidirect_product(rep);
      ctx.wrote(o->out, io::to_json(a));
      return ctx.verified(check_left_alia(a));
    });
    opt(sc, "-p,--rep", o->p, "Representation");
    opt(sc, "-o,--output", o->out, "Output algebra");
  }
  {
    auto* sc = sub("double", "Double bracket on A + A*", [&ctx, o] {
      AlgebraTable a = load_algebra(o->a);
      AlgebraTable s = load_algebra(o->astar);
      AlgebraTable d = double_bracket(a, s);
      ctx.wrote(o->out, io::to_json(d));
      return ctx.verified(check_manin_triple(a, s, d));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra A");
    opt(sc, "--astar", o->astar, "Algebra A*");
    opt(sc, "-o,--output", o->out, "Output double");
  }
  {
    auto* sc = sub("delta", "delta_r for any r", [&ctx, o] {
      Comultiplication delta = delta_from_r(load_algebra(o->a), load_tensor2(o->r));
      ctx.wrote(o->out, io::to_json(delta));
      return kPass;
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-r,--r-matrix", o->r, "Tensor2 r");
    opt(sc, "-o,--output", o->out, "Output comultiplication");
  }
  {
    auto* sc = sub("triangular", "Triangular bialgebra of an antisymmetric solution", [&ctx, o] {
      AlgebraTable a = load_algebra(o->a);
      TriangularBialgebra tri = triangular_bialgebra(a, load_tensor2(o->r));
      ctx.wrote(o->out, io::to_json(tri.delta));
      if (!o->astar.empty()) ctx.wrote(o->astar, io::to_json(tri.dual));
      return ctx.verified(check_bialgebra(a, tri.delta));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-r,--r-matrix", o->r, "Tensor2 r");
    opt(sc, "-o,--output", o->out, "Output comultiplication");
    opt(sc, "--dual", o->astar, "Also write the dual algebra here", false);
  }
  {
    auto* sc = sub("sub-adjacent", "[x,y] = x>y + x<y", [&ctx, o] {
      AlgebraTable a = sub_adjacent(load_pre(o->in));
      ctx.wrote(o->out, io::to_json(a));
      return ctx.verified(check_left_alia(a));
    });
    opt(sc, "-i,--input", o->in, "Pre-algebra");
    opt(sc, "-o,--output", o->out, "Output algebra");
  }
  {
    auto* sc = sub("pre-from-pre-lie", "x>y = x*y, x<y = -y*x", [&ctx, o] {
      PreAlgebraTable p = pre_from_pre_lie(load_algebra(o->in));
      ctx.wrote(o->out, io::to_json(p));
      return ctx.verified(check_pre_left_alia(p));
    });
    opt(sc, "-i,--input", o->in, "Pre-Lie algebra");
    opt(sc, "-o,--output", o->out, "Output pre-algebra");
  }
  {
    auto* sc = sub("pre-from-zinbiel", "x>y = x*f(y) + g(x*y), x<y = f(y)*x + g(y*x)", [&ctx, o] {
      AlgebraTable z = load_algebra(o->in);
      Matrix f = o->f.empty() ? Matrix::identity(z.dim()) : load_map(o->f);
      Matrix g = o->g.empty() ? Matrix(z.dim(), z.dim()) : load_map(o->g);
      PreAlgebraTable p = pre_from_zinbiel(z, f, g);
      ctx.wrote(o->out, io::to_json(p));
      return ctx.verified(check_pre_left_alia(p));
    });
    opt(sc, "-i,--input", o->in, "Zinbiel algebra");
    opt(sc, "-f", o->f, "Linear map f (default identity)", false);
    opt(sc, "-g", o->g, "Linear map g (default zero)", false);
    opt(sc, "-o,--output", o->out, "Output pre-algebra");
  }
  {
    auto* sc = sub("canonical-r", "Double and canonical r of a pre-left-Alia algebra", [&ctx, o] {
      LiftedSolution sol = canonical_solution(load_pre(o->in));
      ctx.wrote(o->out, io::to_json(sol.d));
      ctx.wrote(o->r_out, io::to_json(sol.r));
      return ctx.verified(check_ybe(sol.d, sol.r));
    });
    opt(sc, "-i,--input", o->in, "Pre-algebra");
    opt(sc, "-o,--output", o->out, "Output double");
    opt(sc, "-r,--r-output", o->r_out, "Output r");
  }
  {
    auto* sc = sub("lift", "d = A x V* and r = T# - tau(T#)", [&ctx, o] {
      RelativeOperator op(load_rep(o->p), load_map(o->t));
      LiftedSolution sol = lift_T_sharp(op);
      ctx.wrote(o->out, io::to_json(sol.d));
      ctx.wrote(o->r_out, io::to_json(sol.r));
      Report ybe = check_ybe(sol.d, sol.r);
      Report rbo = check_relative_rbo(op);
      Report both = Report::all_of("lift", {ybe, rbo});
      both.pass = ybe.pass == rbo.pass;
      both.info["equivalence"] = both.pass ? "holds" : "violated";
      return ctx.verified(both);
    });
    opt(sc, "-p,--rep", o->p, "Representation");
    opt(sc, "-t,--map", o->t, "Linear map V -> A");
    opt(sc, "-o,--output", o->out, "Output algebra");
    opt(sc, "-r,--r-output", o->r_out, "Output r");
  }
  {
    auto* sc = sub("omega", "omega(x,y) = <(r#)^-1 x, y>", [&ctx, o] {
      AlgebraTable a = load_algebra(o->a);
      BilinearForm w = omega_from_r(a, load_tensor2(o->r));
      ctx.wrote(o->out, io::to_json(w));
      return ctx.verified(check_two_cocycle(a, w));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-r,--r-matrix", o->r, "Tensor2 r");
    opt(sc, "-o,--output", o->out, "Output form");
  }
  {
    auto* sc = sub("pre-from-omega", "Compatible pre-structure of a symplectic 2-cocycle", [&ctx, o] {
      PreAlgebraTable p = pre_from_omega(load_algebra(o->a), load_form(o->w));
      ctx.wrote(o->out, io::to_json(p));
      return ctx.verified(check_pre_left_alia(p));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-w,--omega", o->w, "Form");
    opt(sc, "-o,--output", o->out, "Output pre-algebra");
  }
  {
    auto* sc = sub("adjoint", "Adjoint representation (L, R)", [&ctx, o] {
      Representation rep = adjoint_representation(load_algebra(o->a));
      ctx.wrote(o->out, io::to_json(rep));
      return ctx.verified(check_representation(rep));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-o,--output", o->out, "Output representation");
  }
  {
    auto* sc = sub("coadjoint", "Coadjoint representation (L*, L* - R*)", [&ctx, o] {
      Representation rep = coadjoint_representation(load_algebra(o->a));
      ctx.wrote(o->out, io::to_json(rep));
      return ctx.verified(check_representation(rep));
    });
    opt(sc, "-a,--algebra", o->a, "Algebra");
    opt(sc, "-o,--output", o->out, "Output representation");
  }
}

void add_poly(CLI::App& app, Ctx& ctx, Action& action) {
  auto* poly = app.add_subcommand("poly", "Divided differences of a reflection");
  poly->require_subcommand(1);
  struct Opts {
    std::string reflection = "swap:1,2";
    std::string lform = "x1 - x2";
    std::size_t vars = 3;
    std::string apply, f, g;
    unsigned deg = 6;
    std::size_t pairs = 20;
    std::size_t triples = 200;
    unsigned max_order = 12;
  };
  auto o = std::make_shared<Opts>();
  auto common = [o](CLI::App* sc) {
    sc->add_option("--reflection", o->reflection, "swap:i,j or [[..],..] (column i is R(x_i))")
        ->capture_default_str();
    sc->add_option("--lform", o->lform, "Linear form l_R")->capture_default_str();
    sc->add_option("--vars", o->vars, "Number of variables")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto setup = [o] {
    Reflection r = parse_reflection(o->reflection, o->vars);
    if (r.nvars() != o->vars) throw ParseError("reflection size differs from --vars");
    return std::make_pair(r, LinearForm::parse(o->lform, o->vars));
  };

  auto* dd = poly->add_subcommand("dd", "Print D_R(f)");
  common(dd);
  dd->add_option("--apply", o->apply, "Polynomial f")->required();
  dd->callback([&, o, setup] {
    action = [&ctx, o, setup] {
      auto [r, l] = setup();
      ctx.out << divided_difference(r, l, Polynomial::parse(o->apply, o->vars)).str() << "\n";
      return kPass;
    };
  });

  auto* br = poly->add_subcommand("bracket", "Print [f,g]_R = f D(g) - R(g) D(f)");
  common(br);
  br->add_option("--f", o->f, "Polynomial f")->required();
  br->add_option("--g", o->g, "Polynomial g")->required();
  br->callback([&, o, setup] {
    action = [&ctx, o, setup] {
      auto [r, l] = setup();
      ctx.out << alia_bracket_poly(r, l, Polynomial::parse(o->f, o->vars), Polynomial::parse(o->g, o->vars)).str()
              << "\n";
      return kPass;
    };
  });

  auto* lb = poly->add_subcommand("check-leibniz", "Twisted Leibniz rule on all monomial pairs");
  common(lb);
  lb->add_option("--deg", o->deg, "Degree bound per monomial")->capture_default_str();
  lb->add_option("--pairs", o->pairs, "Extra seeded random dense pairs")->capture_default_str();
  lb->add_flag("--json", ctx.json, "Emit the report as JSON");
  lb->callback([&, o, setup] {
    action = [&ctx, o, setup] {
      auto [r, l] = setup();
      return ctx.report(check_twisted_leibniz_poly(r, l, o->deg, o->pairs, seed_from_env(1)));
    };
  });

  auto* jc = poly->add_subcommand("check-alia", "Symmetric Jacobi identity of [.,.]_R on seeded triples");
  common(jc);
  jc->add_option("--deg", o->deg, "Degree bound")->default_val(4);
  jc->add_option("--triples", o->triples, "Number of triples")->capture_default_str();
  jc->add_flag("--json", ctx.json, "Emit the report as JSON");
  jc->callback([&, o, setup] {
    action = [&ctx, o, setup] {
      auto [r, l] = setup();
      return ctx.report(check_alia_bracket_poly(r, l, o->triples, o->deg, seed_from_env(1)));
    };
  });

  auto* isr = poly->add_subcommand("is-reflection", "rank(I - R) = 1 and finite order");
  isr->add_option("--reflection", o->reflection, "swap:i,j or [[..],..]")->capture_default_str();
  isr->add_option("--vars", o->vars, "Number of variables")->capture_default_str();
  isr->add_option("--max-order", o->max_order, "Largest order tried")->capture_default_str();
  isr->add_flag("--json", ctx.json, "Emit the report as JSON");
  isr->callback([&, o] {
    action = [&ctx, o] {
      return ctx.report(is_pseudo_reflection(parse_reflection(o->reflection, o->vars), o->max_order));
    };
  });
}

void add_demo(CLI::App& app, Ctx& ctx, Action& action) {
  auto* demo = app.add_subcommand("demo", "Run the two-dimensional pre-left-Alia pipeline end to end");
  auto input = std::make_shared<std::string>();
  demo->add_option("-i,--input", *input, "Pre-algebra to use instead of the built-in table");
  demo->add_flag("--json", ctx.json, "Emit the stage report as JSON");
  demo->callback([&, input] {
    action = [&ctx, input] {
      PreAlgebraTable p = input->empty() ? fixtures::sample_pre() : load_pre(*input);
      demo::Result res = demo::run_sample(p);
      if (ctx.json)
        ctx.out << res.to_json().dump(2) << "\n";
      else
        ctx.out << res.text();
      return res.pass ? kPass : kFail;
    };
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact left-Alia algebra toolkit"};
  app.require_subcommand(1);
  Ctx ctx{out, err};
  Action action;
  add_checks(app, ctx, action);
  add_builds(app, ctx, action);
  add_poly(app, ctx, action);
  add_demo(app, ctx, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace alia::cli
