#pragma once
// Umbrella header.

#include "shipcap/demand.hpp"
#include "shipcap/error.hpp"
#include "shipcap/fleet.hpp"
#include "shipcap/kvfile.hpp"
#include "shipcap/model.hpp"
#include "shipcap/regression.hpp"
#include "shipcap/report.hpp"
#include "shipcap/scenario.hpp"
#include "shipcap/synthetic.hpp"
#include "shipcap/tanker.hpp"
