#include "treelasso/newick.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

bool is_bare_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  XTree parse() {
    skip_blank();
    if (at_end()) fail("empty input");
    parse_subtree();
    parse_length();  // a length on the root has no edge to sit on
    skip_blank();
    if (at_end()) fail("missing terminating ';'");
    if (peek() == ')') fail("unbalanced parenthesis: unexpected ')'");
    if (peek() != ';') fail(std::string("expected ';', found '") + peek() + "'");
    ++pos_;
    skip_blank();
    if (!at_end()) fail("unexpected text after ';'");

    XTree tree = builder_.build();
    if (tree.leaf_count() < 3) {
      throw InputError("Newick tree has " + std::to_string(tree.leaf_count()) +
                       " leaves; at least 3 are required");
    }
    return tree;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '[') {
        const std::size_t open = pos_;
        auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail_at("unterminated comment", open);
        pos_ = close + 1;
      } else {
        break;
      }
    }
  }

  std::optional<std::string> parse_label() {
    if (at_end()) return std::nullopt;
    if (peek() == '\'') {
      const std::size_t open = pos_++;
      std::string label;
      while (true) {
        if (at_end()) fail_at("unterminated quoted label", open);
        char c = text_[pos_++];
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            label.push_back('\'');
            ++pos_;
          } else {
            break;
          }
        } else {
          label.push_back(c);
        }
      }
      if (!is_valid_taxon(label)) fail_at("invalid taxon label '" + label + "'", open);
      return label;
    }
    if (!is_bare_char(peek())) return std::nullopt;
    const std::size_t start = pos_;
    while (!at_end() && is_bare_char(peek())) ++pos_;
    while (!at_end() && peek() == '\'') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<double> parse_length() {
    skip_blank();
    if (at_end() || peek() != ':') return std::nullopt;
    ++pos_;
    skip_blank();
    const std::size_t start = pos_;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) fail("expected a branch length after ':'");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (!std::isfinite(value)) fail_at("branch length is not finite", start);
    if (value < 0.0) fail_at("negative branch length", start);
    return value;
  }

  TreeBuilder::Handle parse_subtree() {
    skip_blank();
    if (at_end()) fail("unbalanced parenthesis: missing ')'");
    if (peek() == '(') {
      ++pos_;
      const auto vertex = builder_.add_vertex();
      while (true) {
        const auto child = parse_subtree();
        const double length = parse_length().value_or(1.0);
        builder_.add_edge(vertex, child, length);
        skip_blank();
        if (at_end()) fail("unbalanced parenthesis: missing ')'");
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        fail(std::string("expected ',' or ')', found '") + peek() + "'");
      }
      skip_blank();
      const std::size_t label_start = pos_;
      if (parse_label()) fail_at("interior node labels are not supported", label_start);
      return vertex;
    }
    auto label = parse_label();
    if (!label) {
      if (peek() == ',' || peek() == ')' || peek() == ':' || peek() == ';') {
        fail("empty leaf label");
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return builder_.add_leaf(std::move(*label));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TreeBuilder builder_;
};

std::string quote_if_needed(const Taxon& label) {
  if (label.find('\'') == std::string::npos) return label;
  std::string out = "'";
  for (char c : label) {
    out.push_back(c);
    if (c == '\'') out.push_back('\'');
  }
  out.push_back('\'');
  return out;
}

class NewickWriter {
 public:
  explicit NewickWriter(const XTree& tree) : tree_(tree), smallest_(tree.vertex_count()) {}

  std::string write() {
    if (tree_.leaf_count() == 2) {
      return "(" + quote_if_needed(tree_.label(0)) + ":" + format_number(tree_.edge(0).weight) +
             "," + quote_if_needed(tree_.label(1)) + ":0);";
    }
    const XTree::Vertex root = tree_.neighbors(0).front().to;
    compute_smallest(root);
    std::string out;
    emit(root, kNone, out);
    out.push_back(';');
    return out;
  }

 private:
  static constexpr XTree::Vertex kNone = SIZE_MAX;

  // Smallest leaf id in each subtree when the tree hangs from `root`.
  void compute_smallest(XTree::Vertex root) {
    std::vector<std::pair<XTree::Vertex, XTree::Vertex>> order{{root, kNone}};
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [v, parent] = order[i];
      for (const auto& inc : tree_.neighbors(v)) {
        if (inc.to != parent) order.emplace_back(inc.to, v);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, parent] = *it;
      std::size_t best = tree_.is_leaf(v) ? v : SIZE_MAX;
      for (const auto& inc : tree_.neighbors(v)) {
        if (inc.to != parent) best = std::min(best, smallest_[inc.to]);
      }
      smallest_[v] = best;
    }
  }

  void emit(XTree::Vertex v, XTree::Vertex parent, std::string& out) {
    if (tree_.is_leaf(v)) {
      out += quote_if_needed(tree_.label(v));
      return;
    }
    std::vector<XTree::Incidence> children;
    for (const auto& inc : tree_.neighbors(v)) {
      if (inc.to != parent) children.push_back(inc);
    }
    std::sort(children.begin(), children.end(), [&](const auto& a, const auto& b) {
      return smallest_[a.to] < smallest_[b.to];
    });
    out.push_back('(');
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i > 0) out.push_back(',');
      emit(children[i].to, v, out);
      out.push_back(':');
      out += format_number(tree_.edge(children[i].edge).weight);
    }
    out.push_back(')');
  }

  const XTree& tree_;
  std::vector<std::size_t> smallest_;
};

}  // namespace

XTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string write_newick(const XTree& tree) { return NewickWriter(tree).write(); }

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace treelasso
