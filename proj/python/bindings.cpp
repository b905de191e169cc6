// Copyright 2026 The QOS3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qos3/json_io.hpp"
#include "qos3/protocol.hpp"
#include "qos3/report.hpp"

namespace py = pybind11;
using namespace qos3;

namespace {

using PyMatrix = std::vector<std::vector<Complex>>;

CMat to_cmat(const PyMatrix &rows) {
  std::size_t n = rows.size();
  CMat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw std::invalid_argument("matrix rows must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

PyMatrix from_cmat(const CMat &m) {
  PyMatrix rows(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

std::array<Complex, 3> to_chi(const std::vector<Complex> &v) {
  if (v.size() != 3) throw std::invalid_argument("chi needs exactly 3 amplitudes");
  return {v[0], v[1], v[2]};
}

}  // namespace

PYBIND11_MODULE(_qos3, m) {
  m.doc() = "exact branch-enumeration simulator for two three-party single-qutrit "
            "operation-sharing protocols";

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t, std::int64_t>())
      .def_readonly("num", &Rational::num)
      .def_readonly("den", &Rational::den)
      .def("value", &Rational::value)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational &r) { return "Rational(" + r.str() + ")"; })
      .def("__eq__", [](const Rational &a, const Rational &b) { return a == b; });

  py::class_<Unitary>(m, "Unitary")
      .def(py::init([](const PyMatrix &rows) { return Unitary(to_cmat(rows)); }))
      .def_static("identity", &Unitary::identity)
      .def_property_readonly("matrix", [](const Unitary &u) { return from_cmat(u.mat()); })
      .def_property_readonly("dim", &Unitary::dim)
      .def("dagger", &Unitary::dagger);

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<std::vector<std::string>, CVec>())
      .def_property_readonly("labels", &StateVector::labels)
      .def_property_readonly("amps", &StateVector::amps)
      .def_property_readonly("num_qutrits", &StateVector::num_qutrits);

  py::class_<MeasurementBasis>(m, "MeasurementBasis")
      .def(py::init<std::vector<CVec>, std::vector<std::string>>())
      .def_readonly("vectors", &MeasurementBasis::vectors)
      .def_readonly("outcome_labels", &MeasurementBasis::outcome_labels);

  py::class_<MeasurementRecord>(m, "MeasurementRecord")
      .def_readonly("measured_labels", &MeasurementRecord::measured_labels)
      .def_readonly("outcome_index", &MeasurementRecord::outcome_index)
      .def_readonly("probability", &MeasurementRecord::probability)
      .def_readonly("post_state", &MeasurementRecord::post_state)
      .def_readonly("negligible", &MeasurementRecord::negligible);

  m.def("tensor", &tensor);
  m.def("apply_unitary", &apply_unitary);
  m.def("measure", &measure);
  m.def("fidelity_up_to_phase", &fidelity_up_to_phase);

  py::class_<BellIndex>(m, "BellIndex")
      .def(py::init<int, int>())
      .def_readonly("n", &BellIndex::n)
      .def_readonly("m", &BellIndex::m)
      .def("__repr__", &BellIndex::str);

  m.def("generalized_bell", &generalized_bell, py::arg("idx"), py::arg("label_a") = "a'",
        py::arg("label_b") = "b'");
  m.def("gbm_basis", &gbm_basis);
  m.def("ghz3", &ghz3, py::arg("a") = "a", py::arg("b") = "b", py::arg("c") = "c");
  m.def("computational_basis", &computational_basis);
  m.def("fourier_basis", &fourier_basis);
  m.def("shift_correction", &shift_correction);
  m.def("v_gate", &v_gate);
  m.def("sigma", &sigma);

  py::class_<BasisParams>(m, "BasisParams")
      .def_static("from_xy", &BasisParams::from_xy, py::arg("x1"), py::arg("y1"),
                  py::arg("tau1") = 0.0, py::arg("tau2") = 0.0)
      .def_readonly("x1", &BasisParams::x1)
      .def_readonly("y1", &BasisParams::y1)
      .def_readonly("z1", &BasisParams::z1)
      .def_readonly("x2", &BasisParams::x2)
      .def_readonly("y2", &BasisParams::y2)
      .def_readonly("z2", &BasisParams::z2)
      .def_readonly("cap_n", &BasisParams::cap_n);

  m.def("xi_basis", &xi_basis);
  m.def("w_operators", [](const BasisParams &p) {
    WOperators w = w_operators(p);
    return py::make_tuple(from_cmat(w.w1), from_cmat(w.w2));
  });
  m.def("phase_direction_dagger",
        [](const PyMatrix &w) { return phase_direction_dagger(to_cmat(w)); });

  py::enum_<CaseId>(m, "CaseId")
      .value("C1", CaseId::C1)
      .value("C2", CaseId::C2)
      .value("C3", CaseId::C3)
      .value("C4a", CaseId::C4a)
      .value("C4b", CaseId::C4b);

  m.def("preset_params", &preset_params);
  m.def("preset_basis", [](CaseId c) {
    PresetBasis pb = preset_basis(c);
    return py::make_tuple(pb.basis, from_cmat(pb.w.w1), from_cmat(pb.w.w2));
  });

  py::enum_<FamilyId>(m, "FamilyId")
      .value("U1", FamilyId::U1)
      .value("U2", FamilyId::U2)
      .value("U3", FamilyId::U3)
      .value("U4", FamilyId::U4)
      .value("U5", FamilyId::U5)
      .value("U6", FamilyId::U6)
      .value("U7", FamilyId::U7)
      .value("U8", FamilyId::U8)
      .value("U9", FamilyId::U9)
      .value("U10", FamilyId::U10)
      .value("U12", FamilyId::U12)
      .value("U34", FamilyId::U34)
      .value("U15", FamilyId::U15)
      .value("U67", FamilyId::U67)
      .value("U18", FamilyId::U18)
      .value("U910", FamilyId::U910)
      .value("U34minus12", FamilyId::U34minus12)
      .value("U67minus15", FamilyId::U67minus15)
      .value("U910minus18", FamilyId::U910minus18);

  py::enum_<Sign>(m, "Sign")
      .value("Plus", Sign::Plus)
      .value("Minus", Sign::Minus)
      .value("Nothing", Sign::None);

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init([](std::vector<double> mu) { return FamilyParams{std::move(mu)}; }))
      .def_readonly("mu", &FamilyParams::mu);

  m.def("family_param_count", &family_param_count);
  m.def("sample_family", &sample_family);
  m.def("classify", &classify, py::arg("u"), py::arg("tol") = kTol);
  m.def("in_family", &in_family);
  m.def("commutation_sign", [](const PyMatrix &u, const PyMatrix &w) {
    CommutationSign s = commutation_sign(to_cmat(u), to_cmat(w));
    return py::make_tuple(s.sign, s.residual);
  });
  m.def("commutant_dimension",
        [](const PyMatrix &w, Sign sign, double tol) {
          return commutant_dimension(to_cmat(w), sign, tol);
        },
        py::arg("w"), py::arg("sign"), py::arg("tol") = kTol);
  m.def("predicted_probability", &predicted_probability);

  py::class_<std::mt19937_64>(m, "Rng").def(py::init<std::uint64_t>());
  m.def("random_unitary", &random_unitary);
  m.def("generic_unitary", &generic_unitary, py::arg("rng"), py::arg("min_entry") = 0.05);
  m.def("random_chi",
        [](std::mt19937_64 &rng, double min_entry) {
          std::array<Complex, 3> chi = random_chi(rng, min_entry);
          return std::vector<Complex>(chi.begin(), chi.end());
        },
        py::arg("rng"), py::arg("min_entry") = 0.0);
  m.def("sample_family_random", &sample_family_random);
  m.def("random_basis_params", &random_basis_params);

  py::enum_<Scheme>(m, "Scheme").value("S1", Scheme::S1).value("S2", Scheme::S2);
  py::enum_<PartyName>(m, "PartyName")
      .value("Alice", PartyName::Alice)
      .value("Bob", PartyName::Bob)
      .value("Charlie", PartyName::Charlie);

  py::class_<ClassicalMessage>(m, "ClassicalMessage")
      .def_readonly("sender", &ClassicalMessage::sender)
      .def_readonly("receivers", &ClassicalMessage::receivers)
      .def_readonly("trits", &ClassicalMessage::trits);

  py::class_<OpRecord>(m, "OpRecord")
      .def_property_readonly("is_gate",
                             [](const OpRecord &o) { return o.kind == OpRecord::Kind::Gate; })
      .def_readonly("party", &OpRecord::party)
      .def_readonly("name", &OpRecord::name)
      .def_readonly("targets", &OpRecord::targets);

  py::class_<Branch>(m, "Branch")
      .def_readonly("outcome_path", &Branch::outcome_path)
      .def_readonly("probability", &Branch::probability)
      .def_readonly("messages", &Branch::messages)
      .def_readonly("ops", &Branch::ops)
      .def_readonly("final_state", &Branch::final_state)
      .def_readonly("fidelity", &Branch::fidelity)
      .def_readonly("protocol_success", &Branch::protocol_success)
      .def_readonly("oracle_success", &Branch::oracle_success);

  py::class_<XiSpec>(m, "XiSpec")
      .def_static("from_preset", &XiSpec::from_preset)
      .def_static("from_params", &XiSpec::from_params);

  py::class_<BranchEnumeration>(m, "BranchEnumeration")
      .def_readonly("scheme", &BranchEnumeration::scheme)
      .def_readonly("branches", &BranchEnumeration::branches)
      .def("channel_qutrits", &BranchEnumeration::channel_qutrits)
      .def_readonly("declared", &BranchEnumeration::declared)
      .def("success_fraction", &BranchEnumeration::success_fraction)
      .def("born_success_mass", &BranchEnumeration::born_success_mass)
      .def("total_probability", &BranchEnumeration::total_probability)
      .def("min_success_fidelity", &BranchEnumeration::min_success_fidelity)
      .def("uniform_probabilities", &BranchEnumeration::uniform_probabilities);

  m.def("run_scheme1",
        [](const Unitary &u, const std::vector<Complex> &chi) {
          return run_scheme1(u, to_chi(chi));
        });
  m.def("run_scheme2",
        [](const Unitary &u, const std::vector<Complex> &chi, const XiSpec &basis,
           std::optional<FamilyId> declared) {
          return run_scheme2(u, to_chi(chi), basis, declared);
        },
        py::arg("u"), py::arg("chi"), py::arg("basis"),
        py::arg("declared") = std::nullopt);

  py::class_<ResourceReport>(m, "ResourceReport")
      .def_readonly("scheme", &ResourceReport::scheme)
      .def_readonly("channel_qutrits", &ResourceReport::channel_qutrits)
      .def_readonly("classical_trits", &ResourceReport::classical_trits)
      .def_readonly("p", &ResourceReport::p)
      .def_readonly("eta", &ResourceReport::eta);

  m.def("resources", &resources);
  m.def("verify_branch_messages", &verify_branch_messages);

  py::class_<OpCounts>(m, "OpCounts")
      .def_readonly("bell_measurements", &OpCounts::bell_measurements)
      .def_readonly("single_measurements", &OpCounts::single_measurements)
      .def_readonly("single_qutrit_ops", &OpCounts::single_qutrit_ops)
      .def_readonly("v_ops", &OpCounts::v_ops);

  m.def("count_operations", &count_operations);

  py::class_<TableRow>(m, "TableRow")
      .def_readonly("scheme", &TableRow::scheme)
      .def_readonly("operation_class", &TableRow::op_class)
      .def_readonly("p", &TableRow::p)
      .def_readonly("eta", &TableRow::eta)
      .def_readonly("channel_qutrits", &TableRow::channel_qutrits)
      .def_readonly("classical_trits", &TableRow::classical_trits)
      .def_readonly("operations", &TableRow::operations)
      .def_readonly("passed", &TableRow::pass);

  m.def("compute_table", &compute_table);
  m.def("table_all_pass", &table_all_pass);
  m.def("render_table", &render_table);
  m.def("render_enumeration", &render_enumeration);
  m.def("enumeration_to_json", &enumeration_to_json);
}
