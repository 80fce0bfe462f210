#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fq/workspace.hpp"

using namespace fq;

namespace {

std::unique_ptr<Workspace> resolve_text(const std::string& text) {
  std::string err;
  auto doc = parse_workspace(text, &err);
  REQUIRE_MESSAGE(doc.has_value(), err);
  return resolve_workspace(*doc);
}

std::string run_records(Workspace& ws, const std::string& command, RunFlags flags = {}) {
  auto reports = run_command(command, ws, flags);
  return render_reports(reports, "records");
}

}  // namespace

TEST_CASE("parse errors carry line numbers") {
  std::string err;
  CHECK(!parse_workspace("category base\n  finset 2\n", &err));
  CHECK(err.find("missing workspace header") != std::string::npos);

  CHECK(!parse_workspace("workspace w\n\nwidget x\n", &err));
  CHECK(err == "line 3: unknown section kind 'widget'");

  CHECK(!parse_workspace("workspace w\n\ncategory a\ncategory a\n", &err));
  CHECK(err == "line 4: duplicate section category a");

  CHECK(!parse_workspace("workspace w\n  finset 2\n", &err));
  CHECK(err == "line 2: entry before any section");
}

TEST_CASE("unresolved references are resolution errors, not check failures") {
  auto ws = resolve_text("workspace w\n\nfilter phi\n  trivial nowhere\n");
  CHECK(!ws->ok);
  REQUIRE(!ws->resolution.items.empty());
  CHECK(ws->resolution.items[0].status == Status::Fail);
  CHECK(ws->resolution.items[0].anchor == "cli/resolve");
  CHECK(ws->resolution.items[0].witness.find("nowhere") != std::string::npos);
}

TEST_CASE("the gallery is complete and self-validating") {
  CHECK(gallery().size() >= 8);
  for (auto& d : gallery()) {
    CAPTURE(d.name);
    CHECK(!d.provenance.empty());
    auto ws = resolve_text(d.text);
    CHECK_MESSAGE(ws->ok, ws->resolution.first_failure());
    auto reports = run_command("validate", *ws, {});
    CHECK_MESSAGE(reports_all_ok(reports), d.name);
  }
  CHECK(find_gallery_doc("finset2") != nullptr);
  CHECK(find_gallery_doc("sierpinski-arrow") != nullptr);
  CHECK(find_gallery_doc("product-frechet-shadow") != nullptr);
  CHECK(find_gallery_doc("no-such-doc") == nullptr);
}

TEST_CASE("shipped gallery files match the embedded documents") {
  for (auto& d : gallery()) {
    CAPTURE(d.name);
    std::ifstream in(std::string(GALLERY_DIR) + "/" + d.name + ".doc");
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == d.text);
  }
}

TEST_CASE("serialization round-trips to the same reports") {
  for (auto& d : gallery()) {
    CAPTURE(d.name);
    auto ws1 = resolve_text(d.text);
    auto ws2 = resolve_text(serialize_workspace(ws1->doc));
    CHECK(ws2->ok == ws1->ok);
    RunFlags flags;
    flags.seed = 7;
    CHECK(run_records(*ws1, "validate", flags) == run_records(*ws2, "validate", flags));
  }
}

TEST_CASE("reports are deterministic") {
  auto& doc = *find_gallery_doc("germ-mono");
  auto ws1 = resolve_text(doc.text);
  auto ws2 = resolve_text(doc.text);
  RunFlags flags;
  flags.seed = 42;
  CHECK(run_records(*ws1, "validate", flags) == run_records(*ws2, "validate", flags));
  CHECK(run_records(*ws1, "quotient") == run_records(*ws2, "quotient"));
}

TEST_CASE("the randomized filter-law suite agrees with the oracle") {
  auto ws = resolve_text(find_gallery_doc("finset2")->text);
  RunFlags flags;
  flags.seed = 2026;
  auto reports = run_command("validate", *ws, flags);
  const Report* random = nullptr;
  for (auto& r : reports)
    if (r.subject == "validate/random-filters") random = &r;
  REQUIRE(random != nullptr);
  CHECK_MESSAGE(random->ok(), random->first_failure());
}

TEST_CASE("the quotient command covers projection and germ-mono checks") {
  auto ws = resolve_text(find_gallery_doc("germ-mono")->text);
  auto reports = run_command("quotient", *ws, {});
  CHECK(reports.size() == 2);  // corner and top
  for (auto& r : reports) CHECK_MESSAGE(r.ok(), (r.subject + ": " + r.first_failure()));
}

TEST_CASE("the filter flag selects principal filters by object name") {
  auto ws = resolve_text(find_gallery_doc("germ-mono")->text);
  RunFlags flags;
  flags.filter = "principal:(1,empty)";
  auto reports = run_command("quotient", *ws, flags);
  bool found = false;
  for (auto& r : reports) {
    if (r.subject.find("principal:square") != std::string::npos) found = true;
    CHECK_MESSAGE(r.ok(), (r.subject + ": " + r.first_failure()));
  }
  CHECK(found);

  flags.filter = "principal:(7,7)";
  reports = run_command("quotient", *ws, flags);
  REQUIRE(!reports.empty());
  CHECK(!reports[0].ok());  // reported as a selection error
}

TEST_CASE("the product command witnesses principal collapse") {
  auto ws = resolve_text(
      "workspace tiny\n\ncategory base\n  finset 1\n\nfilterproduct fp\n  base base\n"
      "  copies 2\n  principal {0}\n");
  REQUIRE(ws->ok);
  auto reports = run_command("product", *ws, {});
  REQUIRE(reports.size() == 1);
  CHECK_MESSAGE(reports[0].ok(), reports[0].first_failure());
  bool collapsed = false;
  for (auto& it : reports[0].items)
    if (it.check == "principal-collapse" && it.status == Status::Pass) collapsed = true;
  CHECK(collapsed);
}

TEST_CASE("the model-check command verifies and transfers") {
  auto ws = resolve_text(find_gallery_doc("finset2-model")->text);
  auto reports = run_command("model-check", *ws, {});
  CHECK(reports.size() == 2);  // the structure itself, then the transfer at `top`
  for (auto& r : reports) CHECK_MESSAGE(r.ok(), (r.subject + ": " + r.first_failure()));
}

TEST_CASE("the shapes-check command validates the quotient tuple") {
  auto ws = resolve_text(find_gallery_doc("interval-fragment")->text);
  auto reports = run_command("shapes-check", *ws, {});
  REQUIRE(reports.size() == 1);
  CHECK_MESSAGE(reports[0].ok(), reports[0].first_failure());
}

TEST_CASE("the sset-demo command emits tables and verdicts") {
  auto ws = resolve_text(find_gallery_doc("dn")->text);
  RunFlags flags;
  flags.window = 12;
  auto reports = run_command("sset-demo", *ws, flags);
  CHECK(reports.size() == 4);  // the interval demo plus three families
  for (auto& r : reports) CHECK_MESSAGE(r.ok(), (r.subject + ": " + r.first_failure()));
  int tables = 0, verdicts = 0;
  for (auto& r : reports)
    for (auto& it : r.items) {
      if (it.check.rfind("d_n table", 0) == 0) ++tables;
      if (it.check.rfind("divergence verdict", 0) == 0) ++verdicts;
    }
  CHECK(tables == 3);
  CHECK(verdicts == 3);
}

TEST_CASE("records carry the schema version on every line") {
  auto ws = resolve_text(find_gallery_doc("finset2")->text);
  auto text = run_records(*ws, "validate");
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.find("\"schema\":\"fq.report.v1\"") != std::string::npos);
  }
  CHECK(lines > 3);
}
