// Command-line front end. Exit status: 0 success, 1 a verification failed,
// 2 bad usage or unreadable input.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cddembed/acceptance.hpp"
#include "cddembed/connectivity.hpp"
#include "cddembed/decomposition.hpp"
#include "cddembed/depth.hpp"
#include "cddembed/embedding.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/io.hpp"
#include "cddembed/shared_subspace.hpp"

namespace cddembed {
namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

// Bad input; printed as "<path>:<line>:<column>: <message>" and exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<CheckOutcome> outcomes;
  double seconds = 0;

  bool ok() const {
    for (const CheckOutcome& o : outcomes) {
      if (!o.pass) return false;
    }
    return true;
  }

  std::string text() const {
    std::ostringstream out;
    out << "command " << command << '\n';
    for (const auto& [path, digest] : inputs) out << "input " << path << " fnv1a64=" << digest << '\n';
    for (const CheckOutcome& o : outcomes) {
      out << (o.pass ? "pass " : "FAIL ") << o.name << ": " << o.detail << '\n';
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    out << "wall_seconds " << buf << '\n' << "result " << (ok() ? "ok" : "failed") << '\n';
    return out.str();
  }
};

class Inputs {
 public:
  std::string read(const std::string& path) {
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    seen_.emplace_back(path, content_digest(text));
    return text;
  }

  template <typename Parse>
  auto parse(const std::string& path, Parse parse_fn) {
    const std::string text = read(path);
    try {
      return parse_fn(text);
    } catch (const ParseError& e) {
      throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                       ": " + e.message());
    } catch (const Error& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  RepresentedMatroid matroid(const std::string& path) { return parse(path, parse_matroid); }
  DecompositionTree tree(const std::string& path) {
    return parse(path, [](std::string_view t) { return DecompositionTree::parse(t); });
  }

  const std::vector<std::pair<std::string, std::string>>& seen() const { return seen_; }

 private:
  std::vector<std::pair<std::string, std::string>> seen_;
};

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

ElementSet labels_to_set(const RepresentedMatroid& m, const std::vector<std::string>& labels) {
  try {
    return m.indices_of(labels);
  } catch (const UnknownLabel& e) {
    throw InputError(e.what());
  }
}

void print_components(const RepresentedMatroid& m) {
  for (const ElementSet& c : components(m)) {
    const std::vector<std::string> names = m.labels_of(c);
    for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? " " : "") << names[i];
    std::cout << '\n';
  }
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_text_file(path, content);
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact matroid depth tools over prime fields"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint32_t field = 2;
  bool assertions = false;
  std::uint64_t seed = 1;
  std::string out_prefix;
  std::size_t max_enum = kBasisSetGuard;
  app.add_option("--field", field, "Prime modulus for generators")->check(CLI::Range(2u, 65535u));
  app.add_flag("--assert", assertions, "Check every inequality of the constructions at runtime");
  app.add_option("--seed", seed, "Seed for random generators and sampling");
  app.add_option("--out-prefix", out_prefix, "Prefix for output files");
  app.add_option("--max-enum", max_enum, "Largest ground set compared by full basis enumeration");

  Inputs inputs;
  std::function<int()> action;
  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };

  // rank
  std::string m_path;
  auto* rank_cmd = app.add_subcommand("rank", "Print the rank of a matroid");
  rank_cmd->add_option("matroid", m_path)->required();
  rank_cmd->callback([&] {
    action = [&] {
      std::cout << inputs.matroid(m_path).rank() << '\n';
      return kOk;
    };
  });

  // lambda
  std::string x_labels, y_labels;
  auto* lambda_cmd = app.add_subcommand("lambda", "Connectivity of X and Y (or X and its complement)");
  lambda_cmd->add_option("matroid", m_path)->required();
  lambda_cmd->add_option("--x", x_labels, "Labels of X, space separated")->required();
  lambda_cmd->add_option("--y", y_labels, "Labels of Y; defaults to the complement of X");
  lambda_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const ElementSet x = labels_to_set(m, split_labels(x_labels));
      if (y_labels.empty()) {
        std::cout << lambda1(m, x) << '\n';
      } else {
        std::cout << lambda2(m, x, labels_to_set(m, split_labels(y_labels))) << '\n';
      }
      return kOk;
    };
  });

  // lambdastar
  std::string partition_path;
  auto* ls_cmd = app.add_subcommand("lambdastar", "Maximum connectivity over unions of blocks");
  ls_cmd->add_option("matroid", m_path)->required();
  ls_cmd->add_option("partition", partition_path, "One block of labels per line")->required();
  ls_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const auto blocks_text = inputs.parse(partition_path, parse_partition);
      std::vector<ElementSet> blocks;
      for (const auto& b : blocks_text) blocks.push_back(labels_to_set(m, b));
      std::cout << lambda_star(m, blocks) << '\n';
      return kOk;
    };
  });

  // components
  auto* comp_cmd = app.add_subcommand("components", "Print one component per line");
  comp_cmd->add_option("matroid", m_path)->required();
  comp_cmd->callback([&] {
    action = [&] {
      print_components(inputs.matroid(m_path));
      return kOk;
    };
  });

  // minor
  std::string schedule_path, out_path;
  auto* minor_cmd = app.add_subcommand("minor", "Apply a contract/delete schedule");
  minor_cmd->add_option("matroid", m_path)->required();
  minor_cmd->add_option("schedule", schedule_path)->required();
  minor_cmd->add_option("--out", out_path, "Write the minor here instead of stdout");
  minor_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const MinorSchedule s = inputs.parse(schedule_path, parse_schedule);
      try {
        write_or_print(out_path, format_matroid(apply_schedule(m, s)));
      } catch (const ScheduleError& e) {
        throw InputError(schedule_path + ": " + e.what());
      }
      return kOk;
    };
  });

  // validate-decomp
  std::string tree_path;
  std::size_t depth = 0, width = 0;
  bool rooted = false;
  auto* vd_cmd = app.add_subcommand("validate-decomp", "Check a (d,r)-decomposition");
  vd_cmd->add_option("matroid", m_path)->required();
  vd_cmd->add_option("tree", tree_path)->required();
  vd_cmd->add_option("--depth", depth)->required();
  vd_cmd->add_option("--width", width)->required();
  vd_cmd->add_flag("--rooted", rooted, "Check the rooted variant");
  vd_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const DecompositionTree t = inputs.tree(tree_path);
      DecompositionReport rep;
      try {
        rep = rooted ? validate_rooted(m, t, depth, width) : validate_unrooted(m, t, depth, width);
      } catch (const DecompositionError& e) {
        std::cout << "invalid: " << e.what() << '\n';
        return kVerifyFailed;
      }
      std::cout << (rooted ? "depth " : "radius ") << rep.measured_depth
                << (rep.depth_ok ? " ok" : " too large") << '\n'
                << "max lambda* " << rep.max_lambda << '\n';
      for (const VertexViolation& v : rep.violations) {
        std::cout << "violation at " << v.name << ": lambda* " << v.value << " > " << width << '\n';
      }
      std::cout << (rep.valid ? "valid" : "invalid") << '\n';
      return rep.valid ? kOk : kVerifyFailed;
    };
  });

  // root-decomp
  auto* rd_cmd = app.add_subcommand("root-decomp", "Root an unrooted (d,r)-decomposition");
  rd_cmd->add_option("matroid", m_path)->required();
  rd_cmd->add_option("tree", tree_path)->required();
  rd_cmd->add_option("--depth", depth)->required();
  rd_cmd->add_option("--width", width)->required();
  rd_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const DecompositionTree t = inputs.tree(tree_path);
      try {
        std::cout << root_decomposition(m, t, depth, width).to_string() << '\n';
      } catch (const DecompositionError& e) {
        std::cout << "invalid: " << e.what() << '\n';
        return kVerifyFailed;
      }
      return kOk;
    };
  });

  // search-decomp
  auto* sd_cmd = app.add_subcommand("search-decomp", "Search for a rooted (d,r)-decomposition");
  sd_cmd->add_option("matroid", m_path)->required();
  sd_cmd->add_option("--depth", depth)->required();
  sd_cmd->add_option("--width", width)->required();
  sd_cmd->callback([&] {
    action = [&] {
      const std::optional<DecompositionTree> t =
          search_rooted(inputs.matroid(m_path), depth, width);
      if (!t) {
        std::cout << "none\n";
        return kVerifyFailed;
      }
      std::cout << t->to_string() << '\n';
      return kOk;
    };
  });

  // cdd / cd / dd
  std::string cert_out;
  for (const char* mode_name : {"cdd", "cd", "dd"}) {
    auto* cmd = app.add_subcommand(mode_name, std::string("Exact ") + mode_name + " with certificate");
    cmd->add_option("matroid", m_path)->required();
    cmd->add_option("--cert-out", cert_out, "Write the certificate here");
    cmd->callback([&, mode_name] {
      action = [&, mode_name] {
        const DepthResult r = solve_depth(inputs.matroid(m_path), parse_depth_mode(mode_name));
        std::cout << r.value << '\n';
        if (cert_out.empty()) {
          std::cout << format_certificate(r.certificate) << '\n';
        } else {
          write_text_file(cert_out, format_certificate(r.certificate) + "\n");
        }
        return kOk;
      };
    });
  }

  // verify-cert
  std::string cert_path, mode = "cdd";
  auto* vc_cmd = app.add_subcommand("verify-cert", "Replay a depth certificate");
  vc_cmd->add_option("matroid", m_path)->required();
  vc_cmd->add_option("cert", cert_path)->required();
  vc_cmd->add_option("--mode", mode)->check(CLI::IsMember({"cdd", "cd", "dd"}));
  vc_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid m = inputs.matroid(m_path);
      const DepthCertificate c = inputs.parse(cert_path, parse_certificate);
      try {
        std::cout << verify_certificate(m, c, parse_depth_mode(mode)) << '\n';
      } catch (const CertificateError& e) {
        std::cout << "rejected: " << e.what() << '\n';
        return kVerifyFailed;
      }
      return kOk;
    };
  });

  // shared-subspace
  std::vector<std::string> space_paths;
  auto* ss_cmd = app.add_subcommand("shared-subspace",
                                    "Shared subspace of the column spans of several matrices");
  ss_cmd->add_option("spaces", space_paths, "One pfm file per subspace")->required();
  ss_cmd->callback([&] {
    action = [&] {
      std::vector<Subspace> spaces;
      for (const std::string& p : space_paths) {
        const LabeledMatrix lm = inputs.parse(p, parse_pfm);
        spaces.push_back(Subspace::column_space(lm.matrix));
      }
      for (std::size_t i = 1; i < spaces.size(); ++i) {
        if (spaces[i].ambient() != spaces[0].ambient() || !(spaces[i].field() == spaces[0].field())) {
          throw InputError(space_paths[i] + ": field or row count differs from " + space_paths[0]);
        }
      }
      const SharedSubspaceResult r = shared_subspace(spaces, assertions);
      const SharedSubspaceAudit au = audit_shared_subspace(spaces, r.a);
      std::cout << format_pfm(Matrix::from_columns(r.a.field(), r.a.ambient(), r.a.basis_vectors()))
                << format_trace(r.trace) << "dimA " << au.dim_a << " lambda* " << au.lambda_star
                << " quotient-sum " << au.quotient_sum << " dim-sum " << au.dim_total << '\n';
      return au.ok() ? kOk : kVerifyFailed;
    };
  });

  // embed
  std::string emb_m, emb_t;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a matroid as a minor of one of small cdd");
  embed_cmd->add_option("--matroid", emb_m)->required();
  embed_cmd->add_option("--tree", emb_t, "Rooted decomposition")->required();
  embed_cmd->add_option("--depth", depth)->required();
  embed_cmd->add_option("--width", width)->required();
  embed_cmd->callback([&] {
    action = [&] {
      if (out_prefix.empty()) throw CLI::ValidationError("embed needs --out-prefix");
      const RepresentedMatroid m = inputs.matroid(emb_m);
      const DecompositionTree t = inputs.tree(emb_t);
      EmbedOptions opts;
      opts.assertions = assertions;
      std::optional<EmbeddingResult> built;
      try {
        built = embed(m, t, depth, width, opts);
      } catch (const DecompositionError& err) {
        throw InputError(emb_t + ": " + err.what());
      }
      const EmbeddingResult& e = *built;
      write_text_file(out_prefix + ".N.pfm", format_matroid(e.n));
      write_text_file(out_prefix + ".schedule.txt", format_schedule(e.schedule));
      write_text_file(out_prefix + ".cert.sexp", format_certificate(e.certificate) + "\n");
      VerifyOptions vo;
      vo.max_enum = max_enum;
      vo.seed = seed;
      const EmbeddingVerification v =
          verify_embedding(e.n, e.schedule, e.certificate, m, depth, width, vo);
      RunReport rep;
      rep.command = "embed";
      rep.inputs = inputs.seen();
      rep.outcomes.push_back({"size", true, "|M|=" + std::to_string(m.size()) +
                                                " |N|=" + std::to_string(e.n.size()) +
                                                " rank N=" + std::to_string(e.n.rank())});
      rep.outcomes.push_back({"bound", true, std::to_string(e.bound)});
      rep.outcomes.push_back({"raw-certificate-depth", e.raw_depth <= e.bound,
                              std::to_string(e.raw_depth)});
      rep.outcomes.insert(rep.outcomes.end(), v.checks.begin(), v.checks.end());
      rep.seconds = elapsed();
      write_text_file(out_prefix + ".report.txt", rep.text() + format_frames(e.frames));
      std::cout << rep.text();
      return rep.ok() ? kOk : kVerifyFailed;
    };
  });

  // verify-embedding
  std::string ve_n, ve_s, ve_c, ve_m;
  auto* ve_cmd = app.add_subcommand("verify-embedding", "Check an embedding produced by embed");
  ve_cmd->add_option("--n", ve_n)->required();
  ve_cmd->add_option("--schedule", ve_s)->required();
  ve_cmd->add_option("--cert", ve_c)->required();
  ve_cmd->add_option("--matroid", ve_m)->required();
  ve_cmd->add_option("--depth", depth)->required();
  ve_cmd->add_option("--width", width)->required();
  ve_cmd->callback([&] {
    action = [&] {
      const RepresentedMatroid n = inputs.matroid(ve_n);
      const MinorSchedule s = inputs.parse(ve_s, parse_schedule);
      const DepthCertificate c = inputs.parse(ve_c, parse_certificate);
      const RepresentedMatroid m = inputs.matroid(ve_m);
      VerifyOptions vo;
      vo.max_enum = max_enum;
      vo.seed = seed;
      const EmbeddingVerification v = verify_embedding(n, s, c, m, depth, width, vo);
      RunReport rep;
      rep.command = "verify-embedding";
      rep.inputs = inputs.seen();
      rep.outcomes = v.checks;
      if (!v.recovery_exact) {
        rep.outcomes.push_back({"note", true, "matroid equality was sampled, not proven"});
      }
      rep.seconds = elapsed();
      std::cout << rep.text();
      return rep.ok() ? kOk : kVerifyFailed;
    };
  });

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();
  std::size_t gen_n = 0, gen_r = 0;
  std::uint32_t gen_p = 2;
  auto* gen_fc = gen_cmd->add_subcommand("fatcycle", "Fat cycle and its natural rooted tree");
  gen_fc->add_option("n", gen_n)->required()->check(CLI::Range(2, 64));
  gen_fc->callback([&] {
    action = [&] {
      const FatCycle fc = fat_cycle(gen_n, field);
      if (out_prefix.empty()) {
        std::cout << format_matroid(fc.matroid) << fc.tree.to_string() << '\n';
      } else {
        write_text_file(out_prefix + ".pfm", format_matroid(fc.matroid));
        write_text_file(out_prefix + ".sexp", fc.tree.to_string() + "\n");
      }
      return kOk;
    };
  });
  auto* gen_u = gen_cmd->add_subcommand("uniform", "Uniform matroid U(r,n) over GF(p)");
  gen_u->add_option("r", gen_r)->required();
  gen_u->add_option("n", gen_n)->required();
  gen_u->add_option("p", gen_p)->required();
  gen_u->callback([&] {
    action = [&] {
      if (!is_prime(gen_p) || gen_p >= 65536) throw InputError("p must be a prime below 65536");
      try {
        write_or_print(out_prefix.empty() ? "" : out_prefix + ".pfm",
                       format_matroid(uniform(gen_r, gen_n, gen_p)));
      } catch (const RepresentabilityError& e) {
        throw InputError(e.what());
      }
      return kOk;
    };
  });
  std::string edge_path;
  auto* gen_g = gen_cmd->add_subcommand("graphic", "Graphic matroid of an edge list");
  gen_g->add_option("edges", edge_path)->required();
  gen_g->callback([&] {
    action = [&] {
      const MultiGraph g = inputs.parse(edge_path, parse_edge_list);
      write_or_print(out_prefix.empty() ? "" : out_prefix + ".pfm", format_matroid(graphic(g, field)));
      return kOk;
    };
  });
  RandomParams rp;
  auto* gen_rand = gen_cmd->add_subcommand("random", "Seeded random matrix");
  gen_rand->add_option("--rows", rp.rows);
  gen_rand->add_option("--cols", rp.cols);
  gen_rand->add_option("--density", rp.density, "Percent of nonzero entries")->check(CLI::Range(0u, 100u));
  gen_rand->callback([&] {
    action = [&] {
      if (!is_prime(field)) throw InputError("--field must be prime");
      rp.p = field;
      write_or_print(out_prefix.empty() ? "" : out_prefix + ".pfm",
                     format_matroid(random_instance(seed, rp)));
      return kOk;
    };
  });

  // selftest
  std::vector<int> criteria;
  auto* st_cmd = app.add_subcommand("selftest", "Run the acceptance criteria");
  st_cmd->add_option("criteria", criteria, "Subset of 1-9")->check(CLI::Range(1, 9));
  st_cmd->callback([&] {
    action = [&] {
      bool ok = true;
      if (criteria.empty()) {
        for (const CriterionResult& r : run_acceptance(std::cout)) ok = ok && r.pass;
      } else {
        for (int id : criteria) {
          const CriterionResult r = run_criterion(id);
          std::cout << format_result(r) << std::endl;
          ok = ok && r.pass;
        }
      }
      return ok ? kOk : kVerifyFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cddembed

int main(int argc, char** argv) { return cddembed::run(argc, argv); }
