"""
Numba kernels shared by the learners. Graph adjacency is passed in its compressed form: the outgoing edges of `node`
are `edge_order[offsets[node]:offsets[node + 1]]`, already sorted by edge index.
"""

import logging
import math

import numba as nb
import numpy as np

from banditroute import config


@nb.njit(cache=True)
def _jit_confidence_radius(coefficient, visits_state, visits_edge, unvisited_priority, max_radius):
    if visits_edge == 0 or visits_state == 0:
        return max_radius if unvisited_priority else 0.0
    return math.sqrt(coefficient * math.log(float(visits_state)) / visits_edge)


@nb.njit(cache=True)
def _jit_select_action(
    offsets, edge_order, targets, c_hat, counts, values, node, visits_state, coefficient, unvisited_priority, max_radius
):
    start = offsets[node]
    stop = offsets[node + 1]

    # Unvisited edges share the same sentinel radius; the first one in edge-index order wins outright.
    if unvisited_priority:
        for position in range(start, stop):
            edge = edge_order[position]
            if counts[edge] == 0 or visits_state == 0:
                return edge

    best = -1
    best_u = np.inf
    for position in range(start, stop):
        edge = edge_order[position]
        radius = _jit_confidence_radius(coefficient, visits_state, counts[edge], unvisited_priority, max_radius)
        u = c_hat[edge] + values[targets[edge]] - radius
        if best < 0 or u < best_u:
            best = edge
            best_u = u
    return best


@nb.njit(cache=True)
def _jit_min_q(offsets, edge_order, targets, c_hat, values, node):
    best = np.inf
    for position in range(offsets[node], offsets[node + 1]):
        edge = edge_order[position]
        q = c_hat[edge] + values[targets[edge]]
        if q < best:
            best = q
    return best


@nb.njit(cache=True)
def _jit_record_and_backup(
    offsets, edge_order, targets, counts, cost_sum, c_hat, values, edge, source, cost, destination, full_min
):
    counts[edge] += 1
    cost_sum[edge] += cost
    c_hat[edge] = cost_sum[edge] / counts[edge]

    if source == destination:
        return 0
    if full_min:
        values[source] = _jit_min_q(offsets, edge_order, targets, c_hat, values, source)
        return offsets[source + 1] - offsets[source]

    q = c_hat[edge] + values[targets[edge]]
    if q < values[source]:
        values[source] = q
    return 1


@nb.njit(cache=True)
def _jit_optimistic_costs(sources, c_hat, counts, node_visits, coefficient, unvisited_priority, max_radius):
    costs = np.empty(c_hat.shape[0])
    for edge in range(c_hat.shape[0]):
        radius = _jit_confidence_radius(
            coefficient, node_visits[sources[edge]], counts[edge], unvisited_priority, max_radius
        )
        costs[edge] = max(c_hat[edge] - radius, 0.0)
    return costs


@nb.njit(cache=True)
def _jit_value_iteration(offsets, edge_order, targets, costs, reach, destination, theta, max_sweeps):
    nodes = offsets.shape[0] - 1
    values = np.zeros(nodes)
    updated = np.zeros(nodes)
    residual = np.inf
    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        residual = 0.0
        for node in range(nodes):
            if node == destination or not reach[node]:
                continue
            best = np.inf
            for position in range(offsets[node], offsets[node + 1]):
                edge = edge_order[position]
                target = targets[edge]
                if reach[target]:
                    q = costs[edge] + values[target]
                    if q < best:
                        best = q
            updated[node] = best
            change = abs(best - values[node])
            if change > residual:
                residual = change
        values[:] = updated
        if residual < theta:
            break
    return values, sweeps, residual


def warmup() -> None:
    """
    Compile every kernel for the argument types the learners use, so that compilation never lands inside a timed
    episode.
    """
    offsets = np.array([0, 1, 1], dtype=np.int64)
    edge_order = np.array([0], dtype=np.int64)
    sources = np.array([0], dtype=np.int64)
    targets = np.array([1], dtype=np.int64)
    c_hat = np.zeros(1, dtype=np.float64)
    counts = np.zeros(1, dtype=np.int64)
    node_visits = np.zeros(2, dtype=np.int64)
    values = np.zeros(2, dtype=np.float64)
    reach = np.ones(2, dtype=np.bool_)

    _jit_confidence_radius(1.0, node_visits[0], counts[0], True, config.MAX_RADIUS)
    _jit_select_action(
        offsets, edge_order, targets, c_hat, counts, values, 0, node_visits[0], 1.0, True, config.MAX_RADIUS
    )
    _jit_min_q(offsets, edge_order, targets, c_hat, values, 0)
    _jit_record_and_backup(
        offsets, edge_order, targets, counts.copy(), c_hat.copy(), c_hat.copy(), values.copy(), 0, 0, 1.0, 1, True
    )
    _jit_optimistic_costs(sources, c_hat, counts, node_visits, 1.0, True, config.MAX_RADIUS)
    _jit_value_iteration(offsets, edge_order, targets, c_hat, reach, 1, 1e-3, 10)
    logging.debug("Learner kernels compiled")
