#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fano {

struct CatalogEntry {
    std::string name;
    /// Expression text; families contain the placeholders {d} and {d-1}.
    std::string expr;
    bool family = false;
};

/// Named surfaces read from a text file of "name = expression" lines. Blank lines and
/// lines starting with '#' are ignored.
class Catalog {
  public:
    /// Throws InputError when the file cannot be read or a line is malformed.
    static Catalog load(const std::string& path);
    static Catalog parse(const std::string& text);
    /// FANO_CATALOG from the environment, else the bundled data/catalog.txt.
    static std::string default_path();

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    /// Expression for "name" or "family:N"; nullopt when the name is unknown.
    std::optional<std::string> lookup(const std::string& name) const;

  private:
    std::vector<CatalogEntry> entries_;
};

/// The expression of a family entry at degree d.
std::string expand_family(const std::string& expr, int d);

}  // namespace fano
