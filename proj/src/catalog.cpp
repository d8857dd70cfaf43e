#include "fano/catalog.hpp"

#include "fano/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef FANO_DEFAULT_CATALOG
#define FANO_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace fano {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) s.replace(pos, from.size(), to);
}

}  // namespace

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read catalog " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

Catalog Catalog::parse(const std::string& text) {
    Catalog c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("catalog line " + std::to_string(lineno) + ": expected name = expression");
        CatalogEntry e;
        e.name = trim(line.substr(0, eq));
        e.expr = trim(line.substr(eq + 1));
        if (e.name.empty() || e.expr.empty()) throw InputError("catalog line " + std::to_string(lineno) + ": empty name or expression");
        e.family = e.name.size() > 2 && e.name.ends_with(":d");
        c.entries_.push_back(std::move(e));
    }
    return c;
}

std::string Catalog::default_path() {
    if (const char* env = std::getenv("FANO_CATALOG"); env && *env) return env;
    return FANO_DEFAULT_CATALOG;
}

std::optional<std::string> Catalog::lookup(const std::string& name) const {
    for (const auto& e : entries_)
        if (!e.family && e.name == name) return e.expr;
    const auto colon = name.rfind(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string stem = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    for (const auto& e : entries_) {
        if (!e.family || e.name.substr(0, e.name.size() - 2) != stem) continue;
        int d = 0;
        std::size_t used = 0;
        try {
            d = std::stoi(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != arg.size() || d < 1) throw InputError("bad degree in " + name);
        return expand_family(e.expr, d);
    }
    return std::nullopt;
}

std::string expand_family(const std::string& expr, int d) {
    std::string s = expr;
    replace_all(s, "{d-1}", std::to_string(d - 1));
    replace_all(s, "{d}", std::to_string(d));
    return s;
}

}  // namespace fano
