#pragma once

// Umbrella header.

#include "epg/catalog.hpp"
#include "epg/coset.hpp"
#include "epg/dot.hpp"
#include "epg/graph.hpp"
#include "epg/group.hpp"
#include "epg/group_spec.hpp"
#include "epg/morphisms.hpp"
#include "epg/presentation.hpp"
#include "epg/report_io.hpp"
#include "epg/union_find.hpp"
#include "epg/verify.hpp"
