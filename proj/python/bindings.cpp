#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bklrot/automaton.hpp"
#include "bklrot/oracle.hpp"
#include "bklrot/reversing.hpp"
#include "bklrot/rotating_automata.hpp"
#include "bklrot/sigma.hpp"
#include "bklrot/splitting.hpp"
#include "bklrot/witness.hpp"

namespace py = pybind11;

namespace {

// Words cross the boundary as strings in the p.q / p.q! grammar.
bkl::Word wparse(int n, const std::string& text) {
  return bkl::parse_word(text, n);
}

bkl::Dfa machine(int n, bool star, bool minimized) {
  bkl::Dfa m = star ? bkl::close(bkl::build_P_star(n)) : bkl::build_A(n);
  return minimized ? bkl::minimize(m) : m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "rotating normal form on dual braid (Birman-Ko-Lee) monoids";

  m.def("normalize", [](int n, const std::string& w) {
    return bkl::format_word(bkl::rotating_normal_form(n, wparse(n, w)));
  }, py::arg("n"), py::arg("word"));

  m.def("split", [](int n, const std::string& w) {
    std::vector<std::string> out;
    for (const bkl::Word& e : bkl::phi_splitting(n, wparse(n, w)).entries)
      out.push_back(bkl::format_word(e));
    return out;
  }, py::arg("n"), py::arg("word"), "phi_n-splitting, beta_b first");

  m.def("reverse", [](int n, const std::string& w) {
    bkl::Fraction f = bkl::left_reverse(n, wparse(n, w));
    return py::make_tuple(bkl::format_word(f.denominator),
                          bkl::format_word(f.numerator));
  }, py::arg("n"), py::arg("word"), "left-reverse to (D, N)");

  m.def("is_rotating", [](int n, const std::string& w) {
    return bkl::is_rotating(n, wparse(n, w));
  }, py::arg("n"), py::arg("word"));

  m.def("braids_equal", [](int n, const std::string& u, const std::string& v) {
    return bkl::braids_equal(n, wparse(n, u), wparse(n, v));
  }, py::arg("n"), py::arg("u"), py::arg("v"));

  m.def("are_equivalent", [](int n, const std::string& u, const std::string& v) {
    return bkl::are_equivalent(n, wparse(n, u), wparse(n, v));
  }, py::arg("n"), py::arg("u"), py::arg("v"), "brute-force oracle equality");

  m.def("count_classes", [](int n, int length) {
    return bkl::count_classes(n, length);
  }, py::arg("n"), py::arg("length"));

  m.def("count_accepted", [](int n, int length) {
    return bkl::count_accepted(bkl::build_A(n), length);
  }, py::arg("n"), py::arg("length"));

  m.def("accepts", [](int n, const std::string& w, bool star, bool raw) {
    bkl::Word word = wparse(n, w);
    return bkl::accepts(machine(n, star, false),
                        raw ? word : bkl::mirror(word));
  }, py::arg("n"), py::arg("word"), py::arg("star") = false,
     py::arg("raw") = false);

  m.def("automaton_text", [](int n, bool star, bool minimized) {
    return bkl::export_text(machine(n, star, minimized));
  }, py::arg("n"), py::arg("star") = false, py::arg("minimize") = false);

  m.def("automaton_dot", [](int n, bool star, bool minimized) {
    return bkl::export_dot(machine(n, star, minimized));
  }, py::arg("n"), py::arg("star") = false, py::arg("minimize") = false);

  m.def("phi", [](int n, long k, const std::string& w) {
    return bkl::format_word(bkl::phi(n, k, wparse(n, w)));
  }, py::arg("n"), py::arg("k"), py::arg("word"));

  m.def("mirror", [](int n, const std::string& w) {
    return bkl::format_word(bkl::mirror(wparse(n, w)));
  }, py::arg("n"), py::arg("word"));

  m.def("sigma", [](int n, const std::string& w) {
    bkl::Word rep = bkl::sigma_definite_rep(n, wparse(n, w));
    bkl::SigmaWord artin = bkl::to_artin(n, rep);
    auto [index, verdict] = bkl::sigma_scan(artin);
    py::dict out;
    out["word"] = bkl::format_word(rep);
    out["artin"] = artin.to_string();
    out["index"] = index;
    out["verdict"] = bkl::to_string(verdict);
    return out;
  }, py::arg("n"), py::arg("word"), "sigma-definite representative");

  m.def("witness_pair", [](long k) {
    auto [w, wp] = bkl::witness_pair(k);
    return py::make_tuple(bkl::format_word(w), bkl::format_word(wp));
  }, py::arg("k"));

  m.def("verify_witness", &bkl::verify_witness, py::arg("k"));
}
