#pragma once

#include "fq/shapes.hpp"
#include "fq/ssetlib.hpp"

namespace fq {

// ---- documents ----

/// A plain-text declarative workspace: named sections with key/value entries,
/// cross-referencing each other by section name.
struct WorkspaceDocument {
  std::string name;
  struct Entry {
    std::string key, value;
  };
  struct Section {
    std::string kind, name;
    std::vector<Entry> entries;
    std::string first(const std::string& key) const;
  };
  std::vector<Section> sections;
  const Section* find(const std::string& kind, const std::string& name) const;
};

std::optional<WorkspaceDocument> parse_workspace(const std::string& text,
                                                 std::string* error = nullptr);
/// Canonical text; parse_workspace(serialize_workspace(d)) is semantically d.
std::string serialize_workspace(const WorkspaceDocument& doc);

// ---- resolution ----

/// Every section realized as its engine object, with stable addresses for the
/// internal cross references (filters point into their category's poset).
struct Workspace {
  WorkspaceDocument doc;

  struct Category {
    std::unique_ptr<FinCategory> cat;
    std::unique_ptr<SubterminalPoset> poset;
    std::unique_ptr<ProductTable> products;
    ProductCategoryInfo prod_info;  // when built as a binary product
    bool is_product = false;
  };
  std::map<std::string, Category> categories;

  struct NamedFilter {
    std::string cat;
    Filter filter;
  };
  std::map<std::string, NamedFilter> filters;

  struct NamedClass {
    std::string cat;
    MorphismClass cls;
  };
  std::map<std::string, NamedClass> classes;

  struct NamedModel {
    std::string cat;
    ModelStructureData data;
  };
  std::map<std::string, NamedModel> models;

  struct NamedFilterProduct {
    std::string base;
    int copies = 0;
    SubsetFilter filter;
  };
  std::map<std::string, NamedFilterProduct> filterproducts;

  std::map<std::string, SymbolicFamily> families;
  std::vector<std::string> shapes;  // names of shapes sections (builtin tuple)

  Report resolution;
  bool ok = false;
};

std::unique_ptr<Workspace> resolve_workspace(const WorkspaceDocument& doc);

// ---- commands ----

struct RunFlags {
  int window = 30;
  int max_size = 6;        // search budget (unique-arrow candidate cells)
  std::string filter;      // filter section name, or principal:<object>, or trivial
  std::string format = "text";
  long seed = -1;          // enables the randomized filter-law suite
};

/// Commands: validate, quotient, product, model-check, shapes-check,
/// sset-demo, report (= all of the above in order).
std::vector<Report> run_command(const std::string& command, Workspace& ws,
                                const RunFlags& flags);

/// "text" or "records" (line-delimited, schema-versioned).
std::string render_reports(const std::vector<Report>& reports, const std::string& format);

bool reports_all_ok(const std::vector<Report>& reports);

// ---- gallery ----

struct GalleryDoc {
  std::string name, provenance, text;
};

const std::vector<GalleryDoc>& gallery();
const GalleryDoc* find_gallery_doc(const std::string& name);

}  // namespace fq
