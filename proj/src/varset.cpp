#include "octic/varset.hpp"

#include <cstdlib>
#include <map>

namespace octic {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("OCTIC_LOG");
    if (!env) return 1;
    std::string v(env);
    if (v == "quiet") return 0;
    if (v == "debug") return 2;
    return 1;
  }();
  return level;
}

namespace {

struct Table {
  std::vector<std::string> names;
  std::map<std::string, VarId, std::less<>> index;

  Table() {
    auto add = [&](const std::string& s) {
      index.emplace(s, static_cast<VarId>(names.size()));
      names.push_back(s);
    };
    add("m");
    add("n");
    for (int i = 2; i <= 8; ++i) add("x" + std::to_string(i));
    for (int p = 0; p <= 3; ++p)
      for (int i = 2; i <= 9; ++i)
        add("t" + std::to_string(i) + std::string(p, '\''));
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

VarId vars::id(std::string_view name) {
  const auto& t = table();
  auto it = t.index.find(name);
  if (it == t.index.end())
    throw unbound_variable("unknown variable: " + std::string(name));
  return it->second;
}

bool vars::known(std::string_view name) {
  return table().index.count(name) != 0;
}

const std::string& vars::name(VarId id) {
  const auto& t = table();
  if (id >= t.names.size()) throw error("variable id out of range");
  return t.names[id];
}

std::size_t vars::count() { return table().names.size(); }

VarId vars::m() { return id("m"); }
VarId vars::n() { return id("n"); }

VarId vars::x(int i) {
  if (i < 2 || i > 8) throw error("x index out of range");
  return id("x" + std::to_string(i));
}

VarId vars::t(int i, int primes) {
  if (i < 2 || i > 9 || primes < 0 || primes > 3)
    throw error("t index out of range");
  return id("t" + std::to_string(i) + std::string(primes, '\''));
}

}  // namespace octic
