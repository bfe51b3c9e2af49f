// Copyright 2026 The bosefid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSEFID_IO_HPP
#define BOSEFID_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "bosefid/bounds.hpp"
#include "bosefid/conjecture_probe.hpp"
#include "bosefid/distributions.hpp"
#include "bosefid/fock_oracle.hpp"
#include "bosefid/jmatrix.hpp"

namespace bosefid {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Complex numbers are [re, im]; a bare number is read as real.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Row-major nested arrays of complex entries.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

/// Parses a file, throwing ValidationError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

Json to_json(const Configuration& c);
Json to_json(const Distribution& d);
Json to_json(const NormalizedJMatrix& j);
Json to_json(const BoundReport& r);
Json to_json(const SmallErrorReport& r);
Json to_json(const ProbeResult& r);

/// Rows of (configuration, p_general, p_ideal, p_classical).
Json distribution_rows(const Distribution& general, const Distribution& ideal,
                       const Distribution& classical);

/// A distribution table when the document has one, then one "path,value" line per scalar leaf, doubles printed with %.17g.
std::string to_csv(const Json& document);

}  // namespace bosefid

#endif  // BOSEFID_IO_HPP
