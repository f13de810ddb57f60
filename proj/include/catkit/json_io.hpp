#pragma once

#include <string>
#include <vector>

#include "catkit/cohomology.hpp"
#include "catkit/extension.hpp"
#include "catkit/group.hpp"
#include "catkit/nerve.hpp"
#include "catkit/topology.hpp"

#include <json.hpp>

namespace catkit {

using OrderedJson = nlohmann::ordered_json;

/// Group file: {"order": n, "table": [[..],..], "names": [..]?}
FiniteGroup group_from_json(const OrderedJson& j);
OrderedJson group_to_json(const FiniteGroup& g);
FiniteGroup load_group(const std::string& path);

/// Extension file: {"N": <group or path>, "E": ..., "G": ..., "j": [..],
/// "p": [..]}; nested paths resolve relative to the file.
GroupExtension extension_from_json(const OrderedJson& j,
                                   const std::string& base_dir);
OrderedJson extension_to_json(const GroupExtension& e);
GroupExtension load_extension(const std::string& path);

/// Coefficient file: {"cyclic_orders": [..], "action": [[[..]..]..]?}
CoefficientModule coefficients_from_json(const OrderedJson& j,
                                         const FiniteGroup& g);
CoefficientModule load_coefficients(const std::string& path,
                                    const FiniteGroup& g);

/// Space file: {"points": n, "opens": [[..],..]}
FiniteSpace space_from_json(const OrderedJson& j);
FiniteSpace load_space(const std::string& path);

/// Pair file: {"L": [[..]..], "f": [[..]..]}
FactorSystem pair_from_json(const OrderedJson& j, const FiniteGroup& g,
                            const FiniteGroup& n);
FactorSystem load_pair(const std::string& path, const FiniteGroup& g,
                       const FiniteGroup& n);
OrderedJson pair_to_json(const FactorSystem& sys);

OrderedJson classification_to_json(const std::vector<ExtensionClass>& classes);
OrderedJson simplicial_set_to_json(const TruncatedSimplicialSet& s);

/// Comma-separated index list ("0,3,4").
std::vector<int> parse_index_list(const std::string& text);

/// Reads and parses a JSON file; ParseError carries the byte position.
OrderedJson load_json_file(const std::string& path);

} // namespace catkit
