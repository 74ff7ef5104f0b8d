#include "fanowalls/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <ostream>

#include "fanowalls/gieseker.hpp"
#include "fanowalls/io.hpp"
#include "fanowalls/kuznetsov.hpp"
#include "fanowalls/plot.hpp"
#include "fanowalls/tilt.hpp"
#include "fanowalls/walls.hpp"

namespace fanowalls::cli {

namespace {

struct ContextFlags {
  int index = 2;
  int degree = 0;
  FanoContext get() const { return FanoContext::make(index, degree); }
};

struct BoundFlags {
  std::optional<std::int64_t> max_rank, max_c1, max_ch2;
  unsigned workers = 1;
};

ContextFlags& add_context(CLI::App* sub, ContextFlags& flags) {
  sub->add_option("--index", flags.index, "Fano index (1 or 2)")->capture_default_str();
  sub->add_option("--degree", flags.degree, "degree H^3")->required();
  return flags;
}

void add_bounds(CLI::App* sub, BoundFlags& flags) {
  sub->add_option("--max-rank", flags.max_rank, "rank bound of the scan");
  sub->add_option("--max-c1", flags.max_c1, "c_1 bound where the scan needs one");
  sub->add_option("--max-ch2", flags.max_ch2, "bound on |8 ch_2^beta| / D");
  sub->add_option("--workers", flags.workers, "worker threads")->check(CLI::PositiveNumber);
}

std::int64_t bound_scale() {
  const char* env = std::getenv("FANOWALLS_BOUND_SCALE");
  if (env == nullptr || *env == '\0') return 1;
  const Rational q = parse_rational(env);
  if (!is_integer(q) || q < 1) {
    throw ParseError("FANOWALLS_BOUND_SCALE must be a positive integer, got \"" +
                     std::string(env) + "\"");
  }
  return to_int64(q);
}

ScanBounds resolve(const BoundFlags& flags) {
  ScanBounds b = ScanBounds{}.scaled(bound_scale());
  if (flags.max_rank) b.max_rank = *flags.max_rank;
  if (flags.max_c1) b.max_c1 = *flags.max_c1;
  if (flags.max_ch2) b.max_ch2 = *flags.max_ch2;
  if (b.max_rank < 0 || b.max_c1 < 0 || b.max_ch2 < 0) {
    throw ParseError("scan bounds must be non-negative");
  }
  b.workers = flags.workers;
  return b;
}

ChernCharacter lattice_class(FanoContext ctx, const std::string& text) {
  ChernCharacter ch = parse_class(ctx, text);
  if (!lattice_member(ch)) throw DomainError(ch.str() + " is not a lattice class");
  return ch;
}

std::string matrix_rows(const IntMatrix2& m) {
  return std::to_string(m[0][0]) + ' ' + std::to_string(m[0][1]) + '\n' +
         std::to_string(m[1][0]) + ' ' + std::to_string(m[1][1]) + '\n';
}

Json matrix_json(const IntMatrix2& m) {
  return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})});
}

std::string ku_str(KuClass u) { return std::to_string(u.a) + ',' + std::to_string(u.b); }

void print_candidate(std::ostream& out, const WallCandidate& c) {
  out << "params (" << to_string(c.params.a) << ',' << to_string(c.params.b) << ','
      << to_string(c.params.c) << ") beta=" << to_string(c.beta)
      << " t=" << (c.t ? to_string(*c.t) : std::string("ray")) << " sub=" << c.sub.str()
      << " quot=" << c.quot.str() << " locus=" << describe(c.locus) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact numerics for tilt stability on prime Fano threefolds", "fanowalls"};
  app.require_subcommand(1, 1);
  bool json = false;
  app.add_flag("--json", json, "JSON output")->configurable(false);
  std::function<void()> action;

  auto command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "JSON output");
    return sub;
  };

  // chern
  ContextFlags chern_ctx;
  std::int64_t chern_rank = 0, chern_c1 = 0;
  std::string chern_c2 = "0", chern_c3 = "0";
  {
    auto* sub = command("chern", "Chern character from rank and Chern classes");
    add_context(sub, chern_ctx);
    sub->add_option("--rank", chern_rank)->required();
    sub->add_option("--c1", chern_c1, "c_1 in H-units");
    sub->add_option("--c2", chern_c2, "c_2 in L-units");
    sub->add_option("--c3", chern_c3, "c_3 in P-units");
    sub->callback([&] {
      action = [&] {
        const ChernCharacter ch = from_chern_classes(chern_ctx.get(), chern_rank, chern_c1,
                                                     parse_rational(chern_c2),
                                                     parse_rational(chern_c3));
        if (json) {
          out << chern_json(ch).dump() << '\n';
        } else {
          out << ch.str() << '\n';
        }
      };
    });
  }

  // euler
  ContextFlags euler_ctx;
  std::string euler_a, euler_b;
  {
    auto* sub = command("euler", "Euler pairing chi(A, B)");
    add_context(sub, euler_ctx);
    sub->add_option("--a", euler_a, "class \"r,c,m,n\"")->required();
    sub->add_option("--b", euler_b, "class \"r,c,m,n\"")->required();
    sub->callback([&] {
      action = [&] {
        const FanoContext ctx = euler_ctx.get();
        const Rational chi = euler(parse_class(ctx, euler_a), parse_class(ctx, euler_b));
        if (json) {
          out << Json(rational_json(chi)).dump() << '\n';
        } else {
          out << to_string(chi) << '\n';
        }
      };
    });
  }

  // hilbert
  ContextFlags hilbert_ctx;
  std::string hilbert_class;
  {
    auto* sub = command("hilbert", "Hilbert polynomial k -> chi(ch(k))");
    add_context(sub, hilbert_ctx);
    sub->add_option("--class", hilbert_class, "class \"r,c,m,n\"")->required();
    sub->callback([&] {
      action = [&] {
        const HilbertPoly p = hilbert_polynomial(parse_class(hilbert_ctx.get(), hilbert_class));
        if (json) {
          Json coeff = Json::array();
          for (const auto& q : p.coeff) coeff.push_back(rational_json(q));
          out << Json{{"coeff", coeff}, {"rank", rational_json(p.rank)}}.dump() << '\n';
        } else {
          out << to_string(p.coeff[0]) << " + (" << to_string(p.coeff[1]) << ")k + ("
              << to_string(p.coeff[2]) << ")k^2 + (" << to_string(p.coeff[3]) << ")k^3\n";
        }
      };
    });
  }

  // classes
  ContextFlags classes_ctx;
  std::int64_t classes_r = 1, classes_bound = 10;
  bool classes_sign = false;
  unsigned classes_workers = 1;
  {
    auto* sub = command("classes", "(-r)-classes of the Kuznetsov lattice within a box");
    add_context(sub, classes_ctx);
    sub->add_option("--r", classes_r, "chi(u, u) = -r")->required();
    sub->add_option("--bound", classes_bound, "|a|, |b| <= bound")->capture_default_str();
    sub->add_flag("--up-to-sign", classes_sign, "one representative per +-u");
    sub->add_option("--workers", classes_workers)->check(CLI::PositiveNumber);
    sub->callback([&] {
      action = [&] {
        const FanoContext ctx = classes_ctx.get();
        const auto found = enumerate_classes(KuLattice::make(ctx), classes_r, classes_bound,
                                             classes_sign, classes_workers);
        if (json) {
          Json list = Json::array();
          for (auto u : found) list.push_back(ku_class_json(ctx, u));
          out << list.dump() << '\n';
        } else {
          for (auto u : found) out << ku_str(u) << '\n';
        }
      };
    });
  }

  // serre
  ContextFlags serre_ctx;
  {
    auto* sub = command("serre", "numerical Serre operator S with E S = E^T");
    add_context(sub, serre_ctx);
    sub->callback([&] {
      action = [&] {
        const KuLattice lattice = KuLattice::make(serre_ctx.get());
        const IntMatrix2 s = serre_matrix(lattice);
        const IntMatrix2 cube = multiply(s, multiply(s, s));
        if (json) {
          out << Json{{"lattice", context_json(lattice.ctx())},
                      {"serre", matrix_json(s)},
                      {"cube", matrix_json(cube)}}
                     .dump()
              << '\n';
        } else {
          out << matrix_rows(s) << "S^3:\n" << matrix_rows(cube);
        }
      };
    });
  }

  // rotate
  ContextFlags rotate_ctx;
  std::string rotate_class;
  int rotate_steps = 1;
  {
    auto* sub = command("rotate", "orbit of a class under the rotation matrix (Y5)");
    add_context(sub, rotate_ctx);
    sub->add_option("--class", rotate_class, "coordinates \"a,b\"")->required();
    sub->add_option("--steps", rotate_steps, "negative steps use the inverse")
        ->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const FanoContext ctx = rotate_ctx.get();
        const auto orbit =
            rotation_orbit(KuLattice::make(ctx), parse_ku_class(rotate_class), rotate_steps);
        if (json) {
          Json list = Json::array();
          for (auto u : orbit) list.push_back(ku_class_json(ctx, u));
          out << list.dump() << '\n';
        } else {
          for (auto u : orbit) out << ku_str(u) << '\n';
        }
      };
    });
  }

  // pell
  std::int64_t pell_dp = 5, pell_n = 1, pell_bound = 100;
  {
    auto* sub = command("pell", "solutions of x^2 - dp y^2 = n in a box");
    sub->add_option("--dp", pell_dp)->required();
    sub->add_option("--n", pell_n)->required();
    sub->add_option("--bound", pell_bound)->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const auto sols = pell_solve(pell_dp, pell_n, pell_bound);
        if (json) {
          Json list = Json::array();
          for (auto [x, y] : sols) list.push_back(Json::array({x, y}));
          out << list.dump() << '\n';
        } else {
          for (auto [x, y] : sols) out << x << ',' << y << '\n';
        }
      };
    });
  }

  // pairing
  ContextFlags pairing_ctx;
  std::string pairing_total;
  std::vector<std::string> pairing_targets;
  std::int64_t pairing_extra = 20;
  {
    auto* sub = command("pairing", "splits A + B = total with prescribed (chi(A,B), chi(B,A))");
    add_context(sub, pairing_ctx);
    sub->add_option("--total", pairing_total, "coordinates \"a,b\"")->required();
    sub->add_option("--target", pairing_targets, "\"chi_ab,chi_ba\", repeatable")->required();
    sub->add_option("--extra", pairing_extra, "search margin")->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const FanoContext ctx = pairing_ctx.get();
        std::vector<PairingTarget> targets;
        for (const auto& t : pairing_targets) {
          const KuClass v = parse_ku_class(t);
          targets.push_back({v.a, v.b});
        }
        const auto found = pairing_system_solve(KuLattice::make(ctx),
                                                parse_ku_class(pairing_total), targets,
                                                pairing_extra);
        if (json) {
          Json list = Json::array();
          for (const auto& d : found) {
            list.push_back({{"sub", ku_class_json(ctx, d.sub)},
                            {"quot", ku_class_json(ctx, d.quot)},
                            {"target", d.target}});
          }
          out << list.dump() << '\n';
        } else {
          for (const auto& d : found) {
            out << "sub " << ku_str(d.sub) << " quot " << ku_str(d.quot) << " target "
                << d.target << '\n';
          }
        }
      };
    });
  }

  // slope, charge, bms share a point
  struct PointFlags {
    ContextFlags ctx;
    std::string cls, t = "0", beta = "0";
  };
  PointFlags slope_f, charge_f, bms_f;
  auto point_command = [&](const char* name, const char* help, PointFlags& f) {
    auto* sub = command(name, help);
    add_context(sub, f.ctx);
    sub->add_option("--class", f.cls, "class \"r,c,m,n\"")->required();
    sub->add_option("--t", f.t, "alpha^2")->capture_default_str();
    sub->add_option("--beta", f.beta)->capture_default_str();
    return sub;
  };
  auto point_of = [](const PointFlags& f) {
    return TiltPoint::make(parse_rational(f.t), parse_rational(f.beta));
  };
  point_command("slope", "tilt slope mu_{alpha,beta}", slope_f)->callback([&] {
    action = [&] {
      const Slope mu = slope(parse_class(slope_f.ctx.get(), slope_f.cls), point_of(slope_f));
      out << (json ? Json(mu.str()).dump() : mu.str()) << '\n';
    };
  });
  point_command("charge", "central charge Z_{alpha,beta}", charge_f)->callback([&] {
    action = [&] {
      const ChargeValue z =
          central_charge(parse_class(charge_f.ctx.get(), charge_f.cls), point_of(charge_f));
      if (json) {
        out << Json{{"re", rational_json(z.re)}, {"im", rational_json(z.im)}}.dump() << '\n';
      } else {
        out << to_string(z.re) << ' ' << to_string(z.im) << '\n';
      }
    };
  });
  point_command("bms", "BMS quadratic form value (>= 0 is the inequality)", bms_f)->callback([&] {
    action = [&] {
      const Rational v = bms_inequality(parse_class(bms_f.ctx.get(), bms_f.cls), point_of(bms_f));
      out << (json ? Json(rational_json(v)).dump() : to_string(v)) << '\n';
    };
  });

  // delta
  ContextFlags delta_ctx;
  std::string delta_class;
  {
    auto* sub = command("delta", "discriminant Delta_H");
    add_context(sub, delta_ctx);
    sub->add_option("--class", delta_class, "class \"r,c,m,n\"")->required();
    sub->callback([&] {
      action = [&] {
        const Rational v = discriminant(parse_class(delta_ctx.get(), delta_class));
        out << (json ? Json(rational_json(v)).dump() : to_string(v)) << '\n';
      };
    });
  }

  // wall-between
  ContextFlags wb_ctx;
  std::string wb_a, wb_b;
  {
    auto* sub = command("wall-between", "numerical wall mu(A) = mu(B)");
    add_context(sub, wb_ctx);
    sub->add_option("--a", wb_a, "class \"r,c,m,n\"")->required();
    sub->add_option("--b", wb_b, "class \"r,c,m,n\"")->required();
    sub->callback([&] {
      action = [&] {
        const FanoContext ctx = wb_ctx.get();
        const WallLocus locus = numerical_wall(parse_class(ctx, wb_a), parse_class(ctx, wb_b));
        out << (json ? locus_json(locus).dump() : describe(locus)) << '\n';
      };
    });
  }

  // walls
  ContextFlags walls_ctx;
  BoundFlags walls_bounds;
  std::string walls_class, walls_beta = "-1/2";
  bool walls_canonical = false;
  {
    auto* sub = command("walls", "destabilizing splits along a vertical line");
    add_context(sub, walls_ctx);
    add_bounds(sub, walls_bounds);
    sub->add_option("--class", walls_class, "class \"r,c,m,n\"")->required();
    sub->add_option("--beta", walls_beta)->capture_default_str();
    sub->add_flag("--canonical", walls_canonical, "one candidate per {sub, quot} pair");
    sub->callback([&] {
      action = [&] {
        const ChernCharacter total = lattice_class(walls_ctx.get(), walls_class);
        auto found = walls_on_line(total, parse_rational(walls_beta), resolve(walls_bounds));
        if (walls_canonical) found = canonical_candidates(std::move(found));
        if (json) {
          Json list = Json::array();
          for (const auto& c : found) list.push_back(candidate_json(c));
          out << list.dump() << '\n';
        } else {
          for (const auto& c : found) print_candidate(out, c);
        }
      };
    });
  }

  // largest-wall
  ContextFlags lw_ctx;
  BoundFlags lw_bounds;
  std::string lw_class, lw_lo = "-2", lw_hi = "0";
  {
    auto* sub = command("largest-wall", "largest semicircular wall meeting a beta window");
    add_context(sub, lw_ctx);
    add_bounds(sub, lw_bounds);
    sub->add_option("--class", lw_class, "class \"r,c,m,n\"")->required();
    sub->add_option("--beta-lo", lw_lo)->capture_default_str();
    sub->add_option("--beta-hi", lw_hi)->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const ChernCharacter total = lattice_class(lw_ctx.get(), lw_class);
        const auto wall =
            largest_wall(total, parse_rational(lw_lo), parse_rational(lw_hi), resolve(lw_bounds));
        if (json) {
          out << (wall ? candidate_json(*wall) : Json(nullptr)).dump() << '\n';
        } else if (wall) {
          print_candidate(out, *wall);
        } else {
          out << "none\n";
        }
      };
    });
  }

  // destab
  ContextFlags destab_ctx;
  std::int64_t destab_bound = 4;
  bool destab_survivors = false;
  {
    auto* sub = command("destab", "rank-one Gieseker destabilizers of 2 - 2L");
    add_context(sub, destab_ctx);
    sub->add_option("--bound", destab_bound, "|a|, |b|, |c| <= bound")->capture_default_str();
    sub->add_flag("--survivors", destab_survivors, "only hits passing the follow-up checks");
    sub->callback([&] {
      action = [&] {
        const DestabilizerScan scan = destabilizer_cases(destab_ctx.get(), destab_bound);
        const auto hits = destab_survivors ? surviving_destabilizers(scan) : scan.hits;
        if (json) {
          Json list = Json::array();
          for (const auto& h : hits) list.push_back(destabilizer_json(h));
          out << Json{{"partition_ok", scan.partition_ok}, {"hits", list}}.dump() << '\n';
        } else {
          for (const auto& h : hits) {
            out << "(" << h.a << ',' << h.b << ',' << h.c << ") case " << h.case_id << ": "
                << h.verdict << '\n';
          }
          out << "partition " << (scan.partition_ok ? "ok" : "broken") << '\n';
        }
      };
    });
  }

  // plot-walls
  ContextFlags plot_ctx;
  BoundFlags plot_bounds;
  std::string plot_class, plot_lo = "-2", plot_hi = "0", plot_tlo = "0", plot_thi = "1/4";
  std::vector<std::string> plot_lines;
  {
    auto* sub = command("plot-walls", "SVG diagram of the walls of a class");
    add_context(sub, plot_ctx);
    add_bounds(sub, plot_bounds);
    sub->add_option("--class", plot_class, "class \"r,c,m,n\"")->required();
    sub->add_option("--beta-lo", plot_lo)->capture_default_str();
    sub->add_option("--beta-hi", plot_hi)->capture_default_str();
    sub->add_option("--t-lo", plot_tlo)->capture_default_str();
    sub->add_option("--t-hi", plot_thi)->capture_default_str();
    sub->add_option("--line", plot_lines, "also mark splits on this vertical line, repeatable");
    sub->callback([&] {
      action = [&] {
        const ChernCharacter total = lattice_class(plot_ctx.get(), plot_class);
        const PlotWindow window{parse_rational(plot_lo), parse_rational(plot_hi),
                                parse_rational(plot_tlo), parse_rational(plot_thi)};
        if (window.beta_lo >= window.beta_hi || window.t_lo < 0 || window.t_lo >= window.t_hi) {
          throw DomainError("empty plot window");
        }
        const ScanBounds bounds = resolve(plot_bounds);
        std::vector<WallCandidate> walls =
            semicircle_walls(total, window.beta_lo, window.beta_hi, bounds);
        for (const auto& line : plot_lines) {
          auto more = walls_on_line(total, parse_rational(line), bounds);
          std::move(more.begin(), more.end(), std::back_inserter(walls));
        }
        out << render_walls_svg(total, window, walls);
      };
    });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace fanowalls::cli
