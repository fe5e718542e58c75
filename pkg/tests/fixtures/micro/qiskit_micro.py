from qiskit import QuantumCircuit

def build(n):
    """Tiny circuit."""
    qc = QuantumCircuit(n, n)  # n qubits
    for i in range(n):
        qc.h(i)
    qc.measure(range(n), range(n))
    return qc
