# The prefix that selects a packaged network instead of a file path, e.g. `example:example_network_22`.
example_prefix = "example:"

# The extension used by graph documents.
graph_extension = ".json"

# The packaged 22-intersection example network.
example_network_22 = "example_network_22"
# The packaged three-node example network with deterministic costs.
example_network_3 = "example_network_3"

# The names of the files written by the `run` and `compare` commands.
episodes_csv = "episodes.csv"
edges_csv = "edges.csv"
summary_csv = "summary.csv"
aggregate_csv = "aggregate.csv"
# Every file a `run` writes; all of them are removed again when the run fails.
run_outputs = (episodes_csv, edges_csv, aggregate_csv, summary_csv)
