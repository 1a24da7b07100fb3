#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace treelasso;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("treelasso_cli_" + name)).string();
}

std::string fixture(const std::string& name) { return fixtures::path(name); }

}  // namespace

TEST_CASE("reconstruct writes the tree") {
  auto r = run({"reconstruct", fixture("caterpillar_cords.tsv")});
  CHECK(r.code == 0);
  XTree t = parse_newick(r.out);
  CHECK(is_equivalent(t, fixtures::caterpillar_tree()));
  CHECK(max_weight_difference(t, fixtures::caterpillar_tree()) <= 1e-9);
  CHECK(r.out == write_newick(fixtures::caterpillar_tree()) + "\n");
}

TEST_CASE("reconstruct to a file with a trace") {
  const auto tree_path = temp_path("tree.nwk");
  const auto trace_path = temp_path("trace.txt");
  auto r = run({"reconstruct", fixture("caterpillar_cords.tsv"), "-o", tree_path, "--trace", trace_path,
                "--exact-rational"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(is_equivalent(parse_newick(fixtures::read_path(tree_path)), fixtures::caterpillar_tree()));
  const auto trace = fixtures::read_path(trace_path);
  CHECK(std::count(trace.begin(), trace.end(), '\n') == 10);
  CHECK(trace.find(" via (") != std::string::npos);
}

TEST_CASE("reconstruct exit statuses") {
  auto incomplete = run({"reconstruct", fixture("two_taxa_of_three.tsv"), "--taxa", "a,b,c"});
  CHECK(incomplete.code == 2);
  CHECK(incomplete.err.find("a\tc\n") != std::string::npos);
  CHECK(incomplete.err.find("b\tc\n") != std::string::npos);

  auto negative = run({"reconstruct", fixture("negative.tsv")});
  CHECK(negative.code == 1);
  CHECK(negative.err.find("line 2") != std::string::npos);

  const auto bad = temp_path("bad.tsv");
  {
    std::ofstream f(bad);
    f << "x\ty\t2\nu\tz\t2\nx\tu\t3\ny\tu\t3\ny\tz\t3\nv\tx\t2\nv\tz\t4\nu\tv\t3\nv\ty\t3\n";
  }
  CHECK(run({"reconstruct", bad}).code == 3);
  CHECK(run({"reconstruct", temp_path("does_not_exist.tsv")}).code == 1);
  CHECK(run({"reconstruct"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("LASSO_EPSILON is honoured and validated") {
  ::setenv("LASSO_EPSILON", "nonsense", 1);
  CHECK(run({"reconstruct", fixture("caterpillar_cords.tsv")}).code == 1);
  ::setenv("LASSO_EPSILON", "1e-7", 1);
  CHECK(run({"reconstruct", fixture("caterpillar_cords.tsv")}).code == 0);
  ::unsetenv("LASSO_EPSILON");
}

TEST_CASE("classify reports every property") {
  auto r = run({"classify", fixture("primed_tree.nwk"), fixture("primed_cords.tsv"), "--oracle-topological"});
  CHECK(r.code == 0);
  for (const char* line : {"\ncover\tyes", "\ntriplet-cover\tyes", "\nshellable\tyes", "\n2d-tree\tyes",
                           "\nedge-weight-lasso\tyes", "\nconnected\tyes", "\nnon-bipartite\tyes",
                           "\ntopological\tgeneric"}) {
    CHECK_MESSAGE(r.out.find(line) != std::string::npos, line);
  }

  auto remark = run({"classify", fixture("quartet_tree.nwk"), fixture("quartet_cords.tsv"),
                     "--oracle-topological"});
  CHECK(remark.code == 0);
  CHECK(remark.out.find("\n2d-tree\tyes") != std::string::npos);
  CHECK(remark.out.find("\nshellable\tno") != std::string::npos);
  CHECK(remark.out.find("\ntopological\trefuted") != std::string::npos);

  auto no_oracle = run({"classify", fixture("quartet_tree.nwk"), fixture("quartet_cords.tsv")});
  CHECK(no_oracle.out.find("topological") == std::string::npos);

  const auto all = temp_path("all.tsv");
  {
    std::ofstream f(all);
    f << format_cord_set(all_cords(fixtures::caterpillar_tree().taxon_set()));
  }
  // A 2d-tree has exactly 2n-3 edges, so only three taxa keep that line at yes.
  auto full = run({"classify", fixture("caterpillar_tree.nwk"), all});
  CHECK(full.out.find("\n2d-tree\tno") != std::string::npos);
  CHECK(std::count(full.out.begin(), full.out.end(), '\n') == 8);
  CHECK(full.out.find("\tno") == full.out.find("\n2d-tree\tno") + 8);

  const auto star = temp_path("star3.nwk");
  const auto star_cords = temp_path("star3.tsv");
  {
    std::ofstream(star) << "(x,y,z);";
    std::ofstream(star_cords) << "x\ty\ny\tz\nx\tz\n";
  }
  auto three = run({"classify", star, star_cords, "--oracle-topological"});
  CHECK(three.code == 0);
  CHECK(three.out.find("\tno") == std::string::npos);
}

TEST_CASE("classify writes the shelling trace") {
  const auto trace = temp_path("shell.txt");
  auto r = run({"classify", fixture("caterpillar_tree.nwk"), fixture("caterpillar_cords.tsv"), "--trace", trace});
  CHECK(r.code == 0);
  const auto text = fixtures::read_path(trace);
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  CHECK(text.find(" | pivots ") != std::string::npos);
}

TEST_CASE("classify rejects mismatched leaf sets") {
  auto r = run({"classify", fixture("quartet_tree.nwk"), fixture("primed_cords.tsv")});
  CHECK(r.code == 1);
}

TEST_CASE("gencover") {
  auto ex3 = run({"gencover", fixture("primed_tree.nwk"), "--assignment", fixture("primed_assignment.tsv")});
  CHECK(ex3.code == 0);
  CHECK(parse_cord_set(ex3.out) == fixtures::primed_cords());
  CHECK(ex3.err.find("|L| = 9") != std::string::npos);

  const auto tree10 = temp_path("tree10.nwk");
  {
    std::ofstream f(tree10);
    f << write_newick(random_tree(10, 77, 0.5, 2.0));
  }
  for (const char* mode : {"min", "closest", "furthest"}) {
    auto r = run({"gencover", tree10, "--transversal", mode, "--seed", "4"});
    CHECK(r.code == 0);
    CHECK(parse_cord_set(r.out).size() == 17);
  }

  const auto star = temp_path("star.nwk");
  {
    std::ofstream f(star);
    f << "(x,y,z);";
  }
  auto s = run({"gencover", star});
  CHECK(parse_cord_set(s.out).size() == 3);

  const auto improper = temp_path("improper.nwk");
  {
    std::ofstream f(improper);
    f << "((a:1,b:1):0,c:1,d:1);";
  }
  CHECK(run({"gencover", improper, "--transversal", "closest"}).code == 1);
  CHECK(run({"gencover", improper, "--transversal", "sideways"}).code == 1);

  const auto order = temp_path("order.txt");
  {
    std::ofstream f(order);
    f << "c' c b' b a' a\n";
  }
  auto ordered = run({"gencover", fixture("primed_tree.nwk"), "--order", order});
  CHECK(ordered.code == 0);
  CHECK(parse_cord_set(ordered.out).contains(Cord("c'", "b'")));
}

TEST_CASE("gencover rejects unstable assignments unless forced") {
  const auto assignment = temp_path("unstable.tsv");
  {
    std::ofstream f(assignment);
    f << "b,b'\tb'\n";
  }
  CHECK(run({"gencover", fixture("primed_tree.nwk"), "--assignment", assignment}).code == 1);
  auto forced = run({"gencover", fixture("primed_tree.nwk"), "--assignment", assignment, "--force"});
  CHECK(forced.code == 0);

  const auto not_cluster = temp_path("not_cluster.tsv");
  {
    std::ofstream f(not_cluster);
    f << "a,b\ta\n";
  }
  CHECK(run({"gencover", fixture("primed_tree.nwk"), "--assignment", not_cluster}).code == 1);
}

TEST_CASE("treefrom2d") {
  auto r = run({"treefrom2d", fixture("primed_cords.tsv"), "--ordering", "a,b,c,a',b',c'"});
  CHECK(r.code == 0);
  CHECK(is_equivalent(parse_newick(r.out), parse_newick("(((a,'a'''),'c'''),(b,'b'''),c);")));
  auto automatic = run({"treefrom2d", fixture("quartet_cords.tsv")});
  CHECK(automatic.code == 0);
  CHECK(parse_newick(automatic.out).fully_resolved());
  CHECK(run({"treefrom2d", fixture("primed_cords.tsv"), "--ordering", "a,a',b,b',c,c'"}).code == 1);
}

TEST_CASE("closure subcommand") {
  auto r = run({"closure", fixture("caterpillar_cords.tsv")});
  CHECK(r.code == 0);
  CHECK(parse_cord_distances(r.out).size() == 21);
  auto partial = run({"closure", fixture("two_taxa_of_three.tsv"), "--taxa", "c"});
  CHECK(partial.code == 2);
}

TEST_CASE("simulate") {
  auto full = run({"simulate", "--n", "8", "--trials", "100", "--seed", "5", "--threads", "3"});
  CHECK(full.code == 0);
  auto lines = full.out.substr(full.out.find('\n') + 1);
  CHECK(lines.find("8\t100\t5\t0\t0\t0\t1\t0\t0\t0\t") == 0);

  auto tiny = run({"simulate", "--n", "3", "--trials", "10"});
  CHECK(tiny.out.find("\n3\t10\t1\t0\t0\t0\t1\t0\t0\t0\t3\t0\n") != std::string::npos);

  auto dropped = run({"simulate", "--n", "8", "--trials", "50", "--dropout", "0.99", "--drop-cover"});
  CHECK(dropped.code == 0);
  CHECK(dropped.out.find("\t0.99\t0\t1\t0\t1\t") != std::string::npos);

  // Same flags, same bytes, whatever the thread count.
  auto a = run({"simulate", "--n", "9", "--trials", "40", "--seed", "8", "--extra", "3", "--dropout",
                "0.3", "--per-trial", "--threads", "1"});
  auto b = run({"simulate", "--n", "9", "--trials", "40", "--seed", "8", "--extra", "3", "--dropout",
                "0.3", "--per-trial", "--threads", "4"});
  CHECK(a.out == b.out);

  CHECK(run({"simulate", "--n", "2"}).code == 1);
  CHECK(run({"simulate", "--dropout", "1"}).code == 1);
  CHECK(run({"simulate", "--weight-range", "0,1"}).code == 1);
  CHECK(run({"simulate", "--trials", "0"}).code == 1);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("reconstruct") != std::string::npos);
}
