#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qmat/json_io.hpp"
#include "qmat/parallel.hpp"
#include "qmat/tits.hpp"

using namespace qmat;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t budget = Matroid::kDefaultBudget;
  unsigned threads = 1;
};

void emit(const Options& opt, const Json& payload, const std::string& text) {
  if (opt.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

Subset parse_label_list(const GroundSet& g, const std::string& csv) {
  Subset out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(g.index(item));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RankVector parse_rank_vector(const std::string& csv) {
  RankVector out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string describe_matroid(const Matroid& m) {
  std::ostringstream os;
  os << "idyll " << m.idyll().name() << ", rank " << m.rank() << ", ground {";
  for (int i = 0; i < m.ground().size(); ++i) os << (i ? "," : "") << m.ground().label(i);
  os << "}, " << m.pluecker().values().size() << " nonzero values\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"matroids with coefficients, morphisms and quiver matroids"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "enumeration budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker thread cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // ---- matroid ----------------------------------------------------------
  auto* matroid_cmd = app.add_subcommand("matroid", "operations on a single matroid");
  matroid_cmd->require_subcommand(1);
  static std::string matroid_file;
  static std::string minor_kind = "contract";
  static std::string minor_set;
  static std::string pushforward_to;

  auto* m_validate = matroid_cmd->add_subcommand("validate", "check the Pluecker relations");
  m_validate->add_option("file", matroid_file)->required();
  auto* m_dual = matroid_cmd->add_subcommand("dual", "dual matroid");
  m_dual->add_option("file", matroid_file)->required();
  auto* m_minor = matroid_cmd->add_subcommand("minor", "contract / delete / restrict");
  m_minor->add_option("file", matroid_file)->required();
  m_minor->add_option("--kind", minor_kind)->check(CLI::IsMember({"contract", "delete", "restrict"}));
  m_minor->add_option("--set", minor_set, "comma-separated labels")->required();
  auto* m_circuits = matroid_cmd->add_subcommand("circuits", "normalized circuit representatives");
  m_circuits->add_option("file", matroid_file)->required();
  auto* m_vectors = matroid_cmd->add_subcommand("vectors", "exhaustive vector enumeration");
  m_vectors->add_option("file", matroid_file)->required();
  auto* m_push = matroid_cmd->add_subcommand("pushforward", "push forward along ToKrasner");
  m_push->add_option("file", matroid_file)->required();
  m_push->add_option("--to", pushforward_to, "target idyll (only K)")->required();

  // ---- morphism ---------------------------------------------------------
  auto* morphism_cmd = app.add_subcommand("morphism", "submonomial matrices as morphisms");
  morphism_cmd->require_subcommand(1);
  static std::string matrix_file, n_file, m_file;
  static std::string source_set, target_set;

  auto* mo_check = morphism_cmd->add_subcommand("check", "criterion concordance report");
  mo_check->add_option("matrix", matrix_file)->required();
  mo_check->add_option("source", n_file)->required();
  mo_check->add_option("target", m_file)->required();
  auto* mo_pre = morphism_cmd->add_subcommand("preimage", "pre-image matroid");
  mo_pre->add_option("matrix", matrix_file)->required();
  mo_pre->add_option("target", m_file)->required();
  auto* mo_minor = morphism_cmd->add_subcommand("minor", "restriction or contraction");
  mo_minor->add_option("matrix", matrix_file)->required();
  mo_minor->add_option("--kind", minor_kind)->check(CLI::IsMember({"contract", "restrict", "delete"}));
  mo_minor->add_option("--source-set", source_set, "A as comma-separated labels");
  mo_minor->add_option("--target-set", target_set, "B as comma-separated labels");
  auto* mo_t = morphism_cmd->add_subcommand("transpose", "transposed matrix");
  mo_t->add_option("matrix", matrix_file)->required();

  // ---- quiver -----------------------------------------------------------
  auto* quiver_cmd = app.add_subcommand("quiver", "quiver matroids and quiver Grassmannians");
  quiver_cmd->require_subcommand(1);
  static std::string rep_file, rank_csv, dim_csv, idyll_name = "K", gradings_file;
  static bool count_only = false;

  auto* q_enum = quiver_cmd->add_subcommand("enumerate", "rational points of Gr_r");
  q_enum->add_option("--rep", rep_file)->required();
  q_enum->add_option("--rank", rank_csv)->required();
  q_enum->add_option("--idyll", idyll_name)->capture_default_str();
  q_enum->add_flag("--count-only", count_only);
  auto* q_tits = quiver_cmd->add_subcommand("tits", "closed K-points");
  q_tits->add_option("--rep", rep_file)->required();
  q_tits->add_option("--rank", rank_csv)->required();
  q_tits->add_flag("--count-only", count_only);
  auto* q_euler = quiver_cmd->add_subcommand("euler", "Tits / subrepresentation report");
  q_euler->add_option("--rep", rep_file)->required();
  q_euler->add_option("--rank", rank_csv)->required();
  q_euler->add_option("--gradings", gradings_file);
  auto* q_sub = quiver_cmd->add_subcommand("subreps", "subrepresentation enumeration");
  q_sub->add_option("--rep", rep_file)->required();
  q_sub->add_option("--dim", dim_csv)->required();
  q_sub->add_flag("--count-only", count_only);
  auto* q_coeff = quiver_cmd->add_subcommand("coeffquiver", "coefficient quiver");
  q_coeff->add_option("--rep", rep_file)->required();

  for (CLI::App* group : app.get_subcommands(nullptr)) {
    group->fallthrough();
    for (CLI::App* leaf : group->get_subcommands(nullptr)) leaf->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_thread_count(opt.threads);

  try {
    if (m_validate->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_file));
      emit(opt, Json{{"ok", true}, {"matroid", matroid_to_json(m)}}, "ok: " + describe_matroid(m));
    } else if (m_dual->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_file)).dual();
      emit(opt, matroid_to_json(m), describe_matroid(m));
    } else if (m_minor->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_file));
      Subset a = parse_label_list(m.ground(), minor_set);
      Matroid out = minor_kind == "contract"   ? m.contracted(a)
                    : minor_kind == "delete"   ? m.deleted(a)
                                               : m.restricted(a);
      emit(opt, matroid_to_json(out), describe_matroid(out));
    } else if (m_circuits->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_file));
      Json arr = Json::array();
      std::string text;
      for (const VectorF& c : m.circuits()) {
        arr.push_back(vector_to_json(c));
        text += c.to_string() + "\n";
      }
      emit(opt, arr, text);
    } else if (m_vectors->parsed()) {
      Matroid m = matroid_from_json(load_json_file(matroid_file));
      Json arr = Json::array();
      std::string text;
      for (const VectorF& v : m.vectors(opt.budget)) {
        arr.push_back(vector_to_json(v));
        text += v.to_string() + "\n";
      }
      emit(opt, arr, text);
    } else if (m_push->parsed()) {
      if (Idyll::parse(pushforward_to) != Idyll::krasner())
        fail(ErrorKind::Usage, "built-in push-forward targets: K");
      Matroid m = matroid_from_json(load_json_file(matroid_file));
      Matroid out = push_forward_matroid(IdyllMorphism::to_krasner(m.idyll()), m);
      emit(opt, matroid_to_json(out), describe_matroid(out));
    } else if (mo_check->parsed()) {
      SubmonomialMatrix phi = matrix_from_json(load_json_file(matrix_file));
      Matroid n = matroid_from_json(load_json_file(n_file));
      Matroid m = matroid_from_json(load_json_file(m_file));
      if (phi.source() != n.ground() || phi.target() != m.ground() ||
          phi.idyll() != n.idyll() || phi.idyll() != m.idyll())
        fail(ErrorKind::Usage, "matrix shape or idyll does not match the given matroids");
      MorphismCheck c = check_morphism_pluecker(phi, n, m);
      bool circuits = is_morphism_circuits(phi, n, m);
      bool quotient = factorization_check(phi, n, m);
      std::optional<bool> vectors;
      if (phi.idyll().finite_carrier()) vectors = is_morphism_vectors(phi, n, m, opt.budget);
      Json report{{"morphism", c.ok},
                  {"criteria",
                   Json{{"pluecker", c.ok},
                        {"circuits", circuits},
                        {"quotient_of_preimage", quotient}}}};
      if (vectors) report["criteria"]["vectors"] = *vectors;
      if (!c.ok) report["witness"] = c.witness->sum;
      std::ostringstream text;
      text << (c.ok ? "morphism: true" : "morphism: false") << "\n"
           << "  pluecker sums         " << (c.ok ? "true" : "false") << "\n"
           << "  circuits _|_ cocircuits " << (circuits ? "true" : "false") << "\n"
           << "  quotient of pre-image " << (quotient ? "true" : "false") << "\n";
      if (vectors) text << "  vector containment    " << (*vectors ? "true" : "false") << "\n";
      if (!c.ok) text << "  witness: " << c.witness->sum << "\n";
      emit(opt, report, text.str());
    } else if (mo_pre->parsed()) {
      SubmonomialMatrix phi = matrix_from_json(load_json_file(matrix_file));
      Matroid m = matroid_from_json(load_json_file(m_file));
      Matroid out = preimage(phi, m);
      emit(opt, matroid_to_json(out), describe_matroid(out));
    } else if (mo_minor->parsed()) {
      SubmonomialMatrix phi = matrix_from_json(load_json_file(matrix_file));
      Subset a = parse_label_list(phi.source(), source_set);
      Subset b = parse_label_list(phi.target(), target_set);
      SubmonomialMatrix out = minor_kind == "contract" ? contract_morphism(phi, a, b)
                              : minor_kind == "delete" ? delete_morphism_dual(phi, a, b)
                                                       : restrict_morphism(phi, a, b);
      emit(opt, matrix_to_json(out), matrix_to_json(out).dump(2) + "\n");
    } else if (mo_t->parsed()) {
      SubmonomialMatrix out = matrix_from_json(load_json_file(matrix_file)).transpose();
      emit(opt, matrix_to_json(out), matrix_to_json(out).dump(2) + "\n");
    } else if (q_enum->parsed()) {
      F1Rep rep = rep_from_json(load_json_file(rep_file));
      std::vector<QuiverMatroid> points =
          enumerate_points(rep, parse_rank_vector(rank_csv), Idyll::parse(idyll_name), opt.budget);
      if (count_only) {
        emit(opt, Json{{"count", points.size()}}, std::to_string(points.size()) + "\n");
      } else {
        Json arr = Json::array();
        for (const auto& p : points) arr.push_back(point_to_json(p));
        emit(opt, Json{{"count", points.size()}, {"points", arr}},
             std::to_string(points.size()) + " points\n");
      }
    } else if (q_tits->parsed()) {
      F1Rep rep = rep_from_json(load_json_file(rep_file));
      std::vector<QuiverMatroid> tits = tits_space(rep, parse_rank_vector(rank_csv), opt.budget);
      if (count_only) {
        emit(opt, Json{{"count", tits.size()}}, std::to_string(tits.size()) + "\n");
      } else {
        Json arr = Json::array();
        for (const auto& p : tits) arr.push_back(point_to_json(p));
        emit(opt, Json{{"count", tits.size()}, {"points", arr}},
             std::to_string(tits.size()) + " closed points\n");
      }
    } else if (q_euler->parsed()) {
      F1Rep rep = rep_from_json(load_json_file(rep_file));
      std::optional<std::vector<Grading>> seq;
      if (!gradings_file.empty()) seq = gradings_from_json(load_json_file(gradings_file), rep);
      EulerReport report = euler_via_tits(rep, parse_rank_vector(rank_csv), seq, opt.budget);
      std::ostringstream text;
      text << "tits " << report.tits_count << ", subreps " << report.subrep_count
           << ", certificate " << certificate_name(report.certificate);
      if (report.euler) text << ", euler " << *report.euler;
      text << "\n";
      emit(opt, euler_report_to_json(report), text.str());
    } else if (q_sub->parsed()) {
      F1Rep rep = rep_from_json(load_json_file(rep_file));
      auto subreps = subrepresentations(rep, parse_rank_vector(dim_csv));
      if (count_only) {
        emit(opt, Json{{"count", subreps.size()}}, std::to_string(subreps.size()) + "\n");
      } else {
        Json arr = Json::array();
        for (const auto& omega : subreps) {
          Json one = Json::object();
          for (int v = 0; v < rep.quiver.vertex_count(); ++v)
            one[rep.quiver.vertex(v)] = Json(rep.sets[v].labels_of(omega[v]));
          arr.push_back(one);
        }
        emit(opt, Json{{"count", subreps.size()}, {"subrepresentations", arr}},
             std::to_string(subreps.size()) + " subrepresentations\n");
      }
    } else if (q_coeff->parsed()) {
      F1Rep rep = rep_from_json(load_json_file(rep_file));
      Quiver gamma = coefficient_quiver(rep);
      Json arrows = Json::array();
      for (const auto& a : gamma.arrows())
        arrows.push_back(Json{{"name", a.name},
                              {"from", gamma.vertex(a.from)},
                              {"to", gamma.vertex(a.to)}});
      Json payload{{"vertices", Json(gamma.vertices())},
                   {"arrows", arrows},
                   {"tree", is_tree(gamma)},
                   {"primitive_cycle", is_primitive_cycle(gamma, rep)}};
      std::ostringstream text;
      text << gamma.vertex_count() << " vertices, " << gamma.arrow_count() << " arrows, "
           << (is_tree(gamma) ? "tree" : "not a tree") << "\n";
      emit(opt, payload, text.str());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Usage:
        return 2;
      case ErrorKind::BudgetExceeded:
        return 3;
      default:
        return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // "qmat enumerate ..." and friends are shorthands for the quiver group.
  std::vector<char*> args(argv, argv + argc);
  static char quiver_word[] = "quiver";
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string a = args[i];
    if (!a.empty() && a[0] == '-') continue;
    if (a == "enumerate" || a == "tits" || a == "euler" || a == "subreps" ||
        a == "coeffquiver")
      args.insert(args.begin() + i, quiver_word);
    break;
  }
  return run(static_cast<int>(args.size()), args.data());
}
