#include "hypersteiner/networks/network.hpp"

#include "hypersteiner/backend.hpp"

namespace hypersteiner::net {

// Network operations are templates over the backend; instantiate both
// backends here so misuses fail at library build time.
template struct Network<FiniteBackend>;
template struct Network<Convex2dBackend>;

template ExtendedDistance network_length<FiniteBackend>(const FiniteBackend&,
                                                        const Network<FiniteBackend>&);
template ExtendedDistance network_length<Convex2dBackend>(const Convex2dBackend&,
                                                          const Network<Convex2dBackend>&);
template Network<FiniteBackend> reduce_degenerate<FiniteBackend>(const FiniteBackend&,
                                                                 Network<FiniteBackend>);
template Network<Convex2dBackend> reduce_degenerate<Convex2dBackend>(const Convex2dBackend&,
                                                                     Network<Convex2dBackend>);

}  // namespace hypersteiner::net
