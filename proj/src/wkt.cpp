#include "rectcover/wkt.hpp"

#include <cctype>
#include <limits>

#include "rectcover/errors.hpp"

namespace rectcover {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() const { return pos_; }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string keyword() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a geometry keyword", pos_);
    std::string word(text_.substr(start, pos_ - start));
    for (char& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return word;
  }

  Coord integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer coordinate", pos_);
    Coord value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<Coord>::max() - 9) / 10)
        throw ParseError("coordinate too large", start);
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      throw ParseError("non-integer coordinate", pos_);
    return negative ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Point> parse_ring(Cursor& cur) {
  cur.expect('(');
  std::vector<Point> ring;
  do {
    Coord x = cur.integer();
    Coord y = cur.integer();
    ring.push_back({x, y});
  } while (cur.try_consume(','));
  std::size_t close_pos = cur.pos();
  cur.expect(')');
  if (ring.size() < 2 || !(ring.front() == ring.back()))
    throw ParseError("ring is not closed", close_pos);
  ring.pop_back();
  return ring;
}

Polygon parse_polygon_body(Cursor& cur) {
  cur.expect('(');
  std::vector<Point> outer = parse_ring(cur);
  std::vector<std::vector<Point>> holes;
  while (cur.try_consume(',')) holes.push_back(parse_ring(cur));
  cur.expect(')');
  return make_polygon(std::move(outer), std::move(holes));
}

void append_ring(std::string& out, const std::vector<Point>& ring) {
  out += '(';
  for (const Point& v : ring) {
    out += std::to_string(v.x);
    out += ' ';
    out += std::to_string(v.y);
    out += ", ";
  }
  out += std::to_string(ring[0].x);
  out += ' ';
  out += std::to_string(ring[0].y);
  out += ')';
}

void append_body(std::string& out, const Polygon& p) {
  out += '(';
  append_ring(out, p.outer);
  for (const auto& hole : p.holes) {
    out += ", ";
    append_ring(out, hole);
  }
  out += ')';
}

}  // namespace

std::vector<Polygon> parse_wkt(std::string_view text) {
  Cursor cur(text);
  std::vector<Polygon> result;
  while (!cur.at_end()) {
    std::size_t at = cur.pos();
    std::string word = cur.keyword();
    if (word == "POLYGON") {
      result.push_back(parse_polygon_body(cur));
    } else if (word == "MULTIPOLYGON") {
      cur.expect('(');
      do {
        result.push_back(parse_polygon_body(cur));
      } while (cur.try_consume(','));
      cur.expect(')');
    } else {
      throw ParseError("unsupported geometry '" + word + "'", at);
    }
  }
  if (result.empty()) throw ParseError("no geometry found", 0);
  return result;
}

std::string to_wkt(const Polygon& p) {
  std::string out = "POLYGON ";
  append_body(out, p);
  return out;
}

std::string to_wkt(const std::vector<Polygon>& ps) {
  if (ps.size() == 1) return to_wkt(ps[0]);
  std::string out = "MULTIPOLYGON (";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i > 0) out += ", ";
    append_body(out, ps[i]);
  }
  out += ')';
  return out;
}

}  // namespace rectcover
