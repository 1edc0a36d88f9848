#pragma once

#include "lovasz/error.hpp"
#include "lovasz/graph.hpp"
#include "lovasz/linalg.hpp"
#include "lovasz/lp.hpp"
#include "lovasz/maxflow.hpp"
#include "lovasz/exact.hpp"
#include "lovasz/theta.hpp"
#include "lovasz/labelings.hpp"
#include "lovasz/certificates.hpp"
#include "lovasz/bundle.hpp"
