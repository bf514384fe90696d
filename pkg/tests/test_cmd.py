import json
import os
import subprocess
import sys
import tempfile

from mumsep.cli import EXIT_SOUNDNESS, RunConfig, cmd_sweep_separable

ROOT = os.path.abspath(os.path.dirname(os.path.abspath(__file__)) + '/..')


def cmd_mumsep(args, expected=0):
    env = dict(os.environ)
    env['PYTHONPATH'] = ROOT + os.pathsep + env.get('PYTHONPATH', '')
    cmd = [sys.executable, '-m', 'mumsep'] + args.split(' ')
    process = subprocess.run(cmd, cwd=ROOT, env=env, stdout=subprocess.PIPE,
                             stderr=subprocess.PIPE, universal_newlines=True)
    assert(process.returncode == expected), process.stderr
    return process.stdout


def test_cmd_mums():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'mums3.json')
        out = json.loads(cmd_mumsep('mums build --d 3 --out %s' % path))
        assert(out['d'] == 3 and out['M'] == 4)
        assert(os.path.exists(path))

        verified = json.loads(cmd_mumsep('mums verify --in %s' % path))
        assert(verified['passed'])

        with open(path) as f:
            obj = json.load(f)
        obj['operators'][0][0][0][0] += 0.01
        tampered = os.path.join(tmp, 'tampered.json')
        with open(tampered, 'w') as f:
            json.dump(obj, f)
        cmd_mumsep('mums verify --in %s' % tampered, expected=3)


def test_cmd_mums_examples():
    with tempfile.TemporaryDirectory() as tmp:
        qubit = os.path.join(tmp, 'mums2.json')
        out = json.loads(cmd_mumsep('mums build --d 2 --out %s' % qubit))
        assert(out['M'] == 3)
        assert(abs(out['kappa'] - 1.0) < 1e-12)

        six = os.path.join(tmp, 'mums6.json')
        cmd_mumsep('mums build --d 6 --out %s' % six)
        assert(json.loads(cmd_mumsep('mums verify --in %s' % six))['passed'])


def writeJson(path, obj):
    with open(path, 'w') as f:
        json.dump(obj, f)
    return path


def test_cmd_errors():
    cmd_mumsep('mums build --d 1', expected=2)
    cmd_mumsep('mums build --d 3 --t 10', expected=3)
    cmd_mumsep('mums verify --in /nonexistent/mums.json', expected=2)
    cmd_mumsep('sweep separable --dims 2,2 --count 0 --theorem T2', expected=2)
    cmd_mumsep('crit eval --theorem T7 --state x.json', expected=2)
    cmd_mumsep('scan isotropic --d 2 --start -1 --step 0.5', expected=2)
    cmd_mumsep('scan ghz --d 2 --m 3 --start 0.5 --stop 1.5 --step 0.5', expected=2)


def test_cmd_malformed_mums():
    with tempfile.TemporaryDirectory() as tmp:
        malformed = [
            {'operators': 5},
            {'d': 2, 'M': 3, 'kappa': 1.0, 'operators': 5},
            {'d': 2, 'M': 0, 'kappa': 1.0, 'operators': []},
            {'d': 0, 'M': 1, 'kappa': 1.0, 'operators': [[]]},
            {'d': 2, 'M': 1, 'kappa': 1.0, 'operators': [3, 4]},
            {'d': 2, 'M': 1, 'kappa': 1.0, 'operators': [[[1, 0], 'x']]},
            [1, 2, 3],
        ]
        for i, obj in enumerate(malformed):
            path = writeJson(os.path.join(tmp, 'bad%d.json' % i), obj)
            cmd_mumsep('mums verify --in %s' % path, expected=2)


def test_cmd_numeric_integrity():
    with tempfile.TemporaryDirectory() as tmp:
        good = os.path.join(tmp, 'mums2.json')
        mixed = os.path.join(tmp, 'mixed.json')
        cmd_mumsep('mums build --d 2 --out %s' % good)
        cmd_mumsep('state gen --kind mixed --dims 2,2 --out %s' % mixed)
        with open(good) as f:
            obj = json.load(f)
        # P + 0.1i I, so outcome weights pick up an imaginary part
        obj['operators'][0][0][0][1] += 0.1
        obj['operators'][0][0][3][1] += 0.1
        skewed = writeJson(os.path.join(tmp, 'skewed.json'), obj)
        cmd_mumsep('crit eval --theorem T1 --state %s --sets %s %s' % (mixed, skewed, skewed),
                   expected=4)


def test_cmd_eval():
    with tempfile.TemporaryDirectory() as tmp:
        p = os.path.join(tmp, 'p.json')
        q = os.path.join(tmp, 'q.json')
        rho = os.path.join(tmp, 'rho.json')
        cmd_mumsep('mums build --d 3 --out %s' % p)
        cmd_mumsep('mums build --d 3 --transpose --out %s' % q)
        cmd_mumsep('state gen --kind isotropic --d 3 --p 0.5 --out %s' % rho)
        report = json.loads(cmd_mumsep('crit eval --theorem T2 --state %s --sets %s %s'
                                       % (rho, p, q)))
        assert(report['theorem'] == 'T2')
        assert(report['detected'])
        assert(report['verdict'] == 'detected')

        cmd_mumsep('state gen --kind isotropic --d 3 --out %s' % rho, expected=2)

        mixed = os.path.join(tmp, 'mixed.json')
        cmd_mumsep('state gen --kind mixed --dims 3,3 --out %s' % mixed)
        report = json.loads(cmd_mumsep('crit eval --theorem T1 --state %s --sets %s %s'
                                       % (mixed, p, q)))
        assert(not report['detected'])

        ghz = os.path.join(tmp, 'ghz.json')
        m2 = os.path.join(tmp, 'm2.json')
        cmd_mumsep('state gen --kind noisy-ghz --d 2 --m 3 --p 0 --out %s' % ghz)
        cmd_mumsep('mums build --d 2 --out %s' % m2)
        report = json.loads(cmd_mumsep('crit eval --theorem T4 --state %s --sets %s %s %s'
                                       % (ghz, m2, m2, m2)))
        assert(not report['detected'] and not report['detected2'])


def test_cmd_scan():
    with tempfile.TemporaryDirectory() as tmp:
        first = os.path.join(tmp, 'first.csv')
        second = os.path.join(tmp, 'second.csv')
        out = json.loads(cmd_mumsep('scan isotropic --d 2 --theorem T2 --step 0.01 --out %s'
                                    % first))
        assert(out['threshold'] == 0.34)
        assert(out['points'] == 101)
        cmd_mumsep('scan isotropic --d 2 --theorem T2 --step 0.01 --out %s' % second)
        with open(first, 'rb') as f1, open(second, 'rb') as f2:
            assert(f1.read() == f2.read())


def test_cmd_sweep():
    out = json.loads(cmd_mumsep('sweep separable --dims 2,3 --count 5 --seed 7 --theorem T2'))
    assert(out['count'] == 5)
    assert(out['max_margin'] <= 1e-9)
    cmd_mumsep('sweep separable --dims 3,3 --count 200 --seed 1 --theorem T2')


def test_cmd_soundness_regression():
    out = json.loads(cmd_mumsep('sweep separable --dims 2,2 --count 3 --seed 1 --theorem T1 '
                                '--detect-tol -10', expected=5))
    assert(out['count'] == 3)
    assert(out['max_margin'] > -10)

    cfg = RunConfig(command='sweep separable', dims=[2, 3], count=2, seed=4, theorem='T2',
                    detect_tol=-10.0)
    assert(cmd_sweep_separable(cfg) == EXIT_SOUNDNESS)
    cfg.detect_tol = 1e-9
    assert(cmd_sweep_separable(cfg) == 0)


if __name__ == '__main__':
    test_cmd_mums()
    test_cmd_mums_examples()
    test_cmd_errors()
    test_cmd_malformed_mums()
    test_cmd_numeric_integrity()
    test_cmd_eval()
    test_cmd_scan()
    test_cmd_sweep()
    test_cmd_soundness_regression()
