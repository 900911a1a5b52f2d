#include "tdom/descriptor.hpp"

#include <cctype>
#include <charconv>

#include "tdom/errors.hpp"

namespace tdom {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string compact) : s_(std::move(compact)) {}

  bool done() const { return pos_ == s_.size(); }
  bool consume(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!consume(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::int64_t integer() {
    std::int64_t v = 0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("descriptor '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Descriptor parse_descriptor(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  Cursor cur(compact);
  if (compact.empty()) cur.fail("empty descriptor");

  if (cur.consume("ucg:")) {
    const std::int64_t n = cur.integer();
    if (!cur.done()) cur.fail("trailing characters");
    if (n < 2) cur.fail("ucg:<n> requires n >= 2");
    return Descriptor{UcgDescriptor{n}};
  }

  std::vector<Factor> factors;
  do {
    cur.expect("K[");
    const std::int64_t a = cur.integer();
    cur.expect(",");
    const std::int64_t b = cur.integer();
    cur.expect("]");
    try {
      factors.push_back(Factor::make(a, b));
    } catch (const Error& e) {
      cur.fail(e.what());
    }
  } while (cur.consume("x"));
  if (!cur.done()) cur.fail("trailing characters");
  return Descriptor{ProductSpec::make(std::move(factors)).canonical()};
}

std::string render_spec(const ProductSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.factors.size(); ++i) {
    if (i) out += 'x';
    out += "K[" + std::to_string(spec.factors[i].a) + "," + std::to_string(spec.factors[i].b) + "]";
  }
  return out;
}

std::string Descriptor::canonical() const {
  if (const auto* u = std::get_if<UcgDescriptor>(&value)) return "ucg:" + std::to_string(u->n);
  return render_spec(std::get<ProductSpec>(value).canonical());
}

ProductSpec Descriptor::product_spec() const {
  if (const auto* u = std::get_if<UcgDescriptor>(&value)) return crt_isomorphism(u->n).spec;
  return std::get<ProductSpec>(value).canonical();
}

Graph Descriptor::build(const GraphLimits& limits) const {
  if (const auto* u = std::get_if<UcgDescriptor>(&value)) return unitary_cayley(u->n, limits);
  return product_spec_graph(std::get<ProductSpec>(value).canonical(), limits);
}

}  // namespace tdom
