import tensorflow.compat.v1 as tf

a = tf.constant(1.0)
b = tf.constant(2.0)
sess = tf.Session()
for _ in range(10):
    total = tf.add(a, b)  # expect: RNC001
    print(sess.run(total))
