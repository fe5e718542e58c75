import cirq

qs = [cirq.LineQubit(i) for i in range(3)]
ops = [cirq.H.on_each(*qs)]
if len(qs) > 2 and qs:
    ops.append(cirq.measure(*qs))
