#pragma once

#include "wavekin/cases.hpp"
#include "wavekin/collision.hpp"
#include "wavekin/config.hpp"
#include "wavekin/diagnostics.hpp"
#include "wavekin/grid.hpp"
#include "wavekin/integrate.hpp"
#include "wavekin/io.hpp"
#include "wavekin/kernel.hpp"
#include "wavekin/oracle.hpp"
#include "wavekin/simulation.hpp"
