#include "budge/pl.hpp"

namespace budge::pl {

namespace {

constexpr std::string_view kAdd = "((2,-2,1))";

constexpr std::string_view kSub =
    "((1,-1,3,5),(2,-2,4,6),(3,-3,-4),(6,-5,-6),(4,-4,1,3),(3,(3,-3),2),"
    "(5,-5,1))";

constexpr std::string_view kMul =
    "((1,-1,(2,-2,3,4),(4,-4,2)),(2,-2),(3,-3,1))";

// div is published as two fragments spliced around sub. The splice joins
// sequence texts by dropping the ")("  pair at the junction, which lands
// sub's statements (and the trailing quotient bookkeeping) inside the main
// loop on r1.
constexpr std::string_view kDivHead =
    "((2,-2,7),(1,(7,-7,2,8),(8,-8,7))";
constexpr std::string_view kDivTail =
    "(9,(2,-2,(1,-1,-7),(7,-7,8),-9)),(7,-7),(9,-9,1),(8,-8,2))";

// Textual sequence concatenation: "(a,b)" ++ "(c,d)" -> "(a,b,c,d)".
std::string splice(std::string_view first, std::string_view second) {
  std::string out(first.substr(0, first.size() - 1));
  out += ',';
  out += second.substr(1);
  return out;
}

}  // namespace

const StdLib& stdlib() {
  static const StdLib lib = [] {
    StdLib l;
    l.add = parse_program(kAdd);
    l.sub = parse_program(kSub);
    l.mul = parse_program(kMul);
    l.div = parse_program(splice(splice(kDivHead, kSub), kDivTail));
    return l;
  }();
  return lib;
}

}  // namespace budge::pl
