#include "verbprof/corpus.hpp"

#include <unordered_set>
#include <utility>

namespace verbprof::corpus {

namespace {

constexpr std::size_t kMaxDepth = 2000;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_atom_char(char c) { return !is_space(c) && c != '(' && c != ')'; }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  bool at_line_start() const { return column_ == 1; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!eof() && is_space(peek())) advance();
  }

  std::string_view read_atom() {
    std::size_t start = pos_;
    while (!eof() && is_atom_char(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

  std::string_view read_line() {
    std::size_t start = pos_;
    while (!eof() && peek() != '\n') advance();
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

SentenceTree parse_tree(Scanner& in, std::size_t depth) {
  const std::size_t open_line = in.line();
  const std::size_t open_col = in.column();
  auto unclosed = [&]() -> ParseError {
    return ParseError("unclosed parenthesis", open_line, open_col);
  };
  if (depth > kMaxDepth) in.fail("tree nesting too deep");

  in.advance();  // '('
  in.skip_space();
  if (in.eof()) throw unclosed();
  if (!is_atom_char(in.peek())) in.fail("empty constituent: expected a label");
  std::string label(in.read_atom());

  in.skip_space();
  if (in.eof()) throw unclosed();
  if (in.peek() == ')') in.fail("empty constituent '" + label + "'");

  if (is_atom_char(in.peek())) {
    std::string form(in.read_atom());
    in.skip_space();
    if (in.eof()) throw unclosed();
    if (in.peek() != ')') in.fail("leaf '" + label + "' must contain exactly one form");
    in.advance();
    return SentenceTree::leaf(std::move(label), std::move(form));
  }

  std::vector<SentenceTree> children;
  while (true) {
    in.skip_space();
    if (in.eof()) throw unclosed();
    char c = in.peek();
    if (c == ')') {
      in.advance();
      break;
    }
    if (c != '(') in.fail("bare token inside constituent '" + label + "'");
    children.push_back(parse_tree(in, depth + 1));
  }
  return SentenceTree::node(std::move(label), std::move(children));
}

void write_tree(const SentenceTree& tree, std::string& out) {
  out += '(';
  out += tree.label;
  if (tree.is_leaf()) {
    out += ' ';
    out += tree.token->form;
  } else {
    for (const auto& child : tree.children) {
      out += ' ';
      write_tree(child, out);
    }
  }
  out += ')';
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string_view to_string(VerbRole role) {
  return role == VerbRole::Main ? "Main" : "CommComplement";
}

SentenceTree SentenceTree::leaf(std::string pos, std::string form) {
  SentenceTree t;
  t.label = pos;
  t.token = Token{std::move(form), std::move(pos)};
  return t;
}

SentenceTree SentenceTree::node(std::string label, std::vector<SentenceTree> children) {
  SentenceTree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

std::vector<Article> parse_treebank_lite(std::string_view text) {
  std::vector<Article> articles;
  std::unordered_set<std::string> seen_ids;
  std::size_t header_line = 0;
  std::size_t header_col = 0;

  auto close_article = [&] {
    if (!articles.empty() && articles.back().sentences.empty()) {
      throw ParseError("article '" + articles.back().id + "' has no sentences", header_line, header_col);
    }
  };

  Scanner in(text);
  while (true) {
    in.skip_space();
    if (in.eof()) break;
    char c = in.peek();
    if (c == '#') {
      if (!in.at_line_start()) in.fail("article header must start a line");
      std::size_t line = in.line();
      std::size_t col = in.column();
      std::string_view header = in.read_line();
      constexpr std::string_view kDirective = "#article";
      if (header.substr(0, kDirective.size()) != kDirective ||
          (header.size() > kDirective.size() && !is_space(header[kDirective.size()]))) {
        throw ParseError("unknown directive; expected '#article <id>'", line, col);
      }
      std::string_view id = trim(header.substr(kDirective.size()));
      if (id.empty()) throw ParseError("article header without id", line, col);
      for (char ch : id) {
        if (is_space(ch)) throw ParseError("article id must not contain whitespace", line, col);
      }
      close_article();
      if (!seen_ids.emplace(id).second) {
        throw ParseError("duplicate article id '" + std::string(id) + "'", line, col);
      }
      header_line = line;
      header_col = col;
      articles.push_back(Article{std::string(id), {}});
    } else if (c == '(') {
      if (articles.empty()) in.fail("missing article header before first tree");
      articles.back().sentences.push_back(parse_tree(in, 0));
    } else if (c == ')') {
      in.fail("unbalanced closing parenthesis");
    } else {
      in.fail("unexpected text outside of a tree");
    }
  }
  close_article();
  return articles;
}

std::string to_treebank_lite(const SentenceTree& tree) {
  std::string out;
  write_tree(tree, out);
  return out;
}

std::string to_treebank_lite(const Article& article) {
  std::string out = "#article " + article.id + "\n";
  for (const auto& sentence : article.sentences) {
    write_tree(sentence, out);
    out += '\n';
  }
  return out;
}

}  // namespace verbprof::corpus
