#pragma once

#include "seqpat/assignment.hpp"
#include "seqpat/core.hpp"
#include "seqpat/enumeration.hpp"
#include "seqpat/errors.hpp"
#include "seqpat/extremal.hpp"
#include "seqpat/metric.hpp"
