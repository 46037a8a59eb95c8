#include "hypersteiner/backend.hpp"

// Backend adapters are header-only; this translation unit pins the header
// into the build so interface breaks surface early.
