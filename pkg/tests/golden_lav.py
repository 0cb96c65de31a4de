"""Snapshots of the LAV fill on R=(3,1,4,4,2), S=(4,3,1,4,2); ``*`` marks visited."""

SNAPSHOTS = [
    [
        '0 0 0 0 0',
        '0 0 0 0 0',
        '0 0 0 0 0',
        '0 0 0 0 0',
        '0 0 0 0 0',
    ],
    [
        '0 0 0 0 0',
        '0 0 0 0 0',
        '0 1* 0 0 0',
        '0 0 0 0 0',
        '0 0 0 0 0',
    ],
    [
        '0 0 0 0 0',
        '0 0 0 0 0',
        '0 1* 1* 0 0',
        '0 0 0 0 0',
        '0 0 0 0 0',
    ],
    [
        '0 0 0* 0 0',
        '0 0 0* 0 0',
        '0 1* 1* 0 0',
        '0 0 0* 0 0',
        '0 0 0* 0 0',
    ],
    [
        '0 0 0* 0 0',
        '0 0 0* 0 0',
        '0 1* 1* 0 0',
        '1* 1* 0* 1* 1*',
        '0 0 0* 0 0',
    ],
    [
        '0 0 0* 0 0',
        '0 0 0* 0 0',
        '0 1* 1* 1* 0',
        '1* 1* 0* 1* 1*',
        '0 0 0* 0 0',
    ],
    [
        '0 0 0* 0 0',
        '0 1* 0* 0 0',
        '0 1* 1* 1* 0',
        '1* 1* 0* 1* 1*',
        '0 0 0* 0 0',
    ],
    [
        '0 0 0* 0 0',
        '0* 1* 0* 0* 0*',
        '0 1* 1* 1* 0',
        '1* 1* 0* 1* 1*',
        '0 0 0* 0 0',
    ],
    [
        '0 0* 0* 0 0',
        '0* 1* 0* 0* 0*',
        '0 1* 1* 1* 0',
        '1* 1* 0* 1* 1*',
        '0 0* 0* 0 0',
    ],
    [
        '1* 0* 0* 1* 1*',
        '0* 1* 0* 0* 0*',
        '0 1* 1* 1* 0',
        '1* 1* 0* 1* 1*',
        '0 0* 0* 0 0',
    ],
    [
        '1* 0* 0* 1* 1*',
        '0* 1* 0* 0* 0*',
        '0 1* 1* 1* 0*',
        '1* 1* 0* 1* 1*',
        '0 0* 0* 0 0*',
    ],
    [
        '1* 0* 0* 1* 1*',
        '0* 1* 0* 0* 0*',
        '1* 1* 1* 1* 0*',
        '1* 1* 0* 1* 1*',
        '1* 0* 0* 1* 0*',
    ],
]
