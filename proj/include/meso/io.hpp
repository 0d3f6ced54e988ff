#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "meso/assembly.hpp"

namespace meso {

// 17-significant-digit formatting; all numeric file output goes through this
// so that identical runs are bit-identical.
std::string fmt17(double v);

// Text matrix dump, one "row col value" line per stored entry (0-based,
// diagonal included).
void save_operator(const SparseSymmetricOperator& op, const std::string& path);
// Reads a dump back onto no particular mesh; pattern taken from the file.
SparseSymmetricOperator load_operator(const std::string& path, OperatorRole role);

// Validates an externally produced stiffness against a mesh edge pattern:
// pattern subset, symmetry after symmetrization, zero row sums restored.
SparseSymmetricOperator ingest_external_stiffness(const std::string& path,
                                                  const EdgeSet& edges, int num_nodes);

void save_rates_csv(const JumpRateMatrix& rates, const DualVoxels& voxels,
                    const std::string& path);
JumpRateMatrix load_rates_csv(const std::string& path, std::vector<double>* volumes_out);

void save_counts_csv(const std::vector<long long>& counts, const std::string& path);
std::vector<long long> load_counts_csv(const std::string& path);

// FNV-1a 64 of the file bytes, hex string; used in run manifests.
std::string file_hash(const std::string& path);

// Manifest embedded in every JSON output: command, parameters, input hashes,
// seeds, tool version. Wall time is logged to stderr, not embedded, so
// identical reruns produce identical bytes.
nlohmann::json make_manifest(const std::string& command,
                             const std::vector<std::pair<std::string, std::string>>& params,
                             const std::vector<std::string>& input_files);

void write_json(const nlohmann::json& j, const std::string& path);

std::string tool_version();

// Worker cap from MESO_THREADS (>=1), hardware concurrency otherwise.
int worker_count();

// Deterministic parallel map: fn(i) for i in [0,n), merged in index order.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace meso
