import pytest

from sombortree.sweep import evaluate_sequence, generate_degree_sequences


@pytest.fixture(scope="session")
def audit_n12():
    """Constructor-vs-oracle audit of every feasible sequence with n <= 12.

    Maps degree tuple -> (SweepRecord, constructed Tree, OracleResult).
    Computed once; shared by the acceptance criteria.
    """
    results = {}
    for d in generate_degree_sequences(12):
        record, constructed, oracle = evaluate_sequence(d)
        results[d.degrees] = (record, constructed, oracle)
    return results
