#pragma once

#include "ecst/core.hpp"
#include "ecst/ecst_xml.hpp"
#include "ecst/frontend.hpp"
#include "ecst/metrics.hpp"
#include "ecst/pipeline.hpp"
#include "ecst/registry.hpp"
