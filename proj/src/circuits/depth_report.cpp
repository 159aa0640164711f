#include "qsm/circuits.hpp"

namespace qsm {

DepthReport depth_report(const Circuit& circuit, const DepthModel& model) {
  DepthReport report;
  report.schedule = schedule_depth(circuit, model);
  report.total_layers = report.schedule.total;
  report.qubits = circuit.num_qubits();
  report.gates = circuit.size();
  return report;
}

}  // namespace qsm
