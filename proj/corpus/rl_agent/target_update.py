import tensorflow as tf

online = tf.Variable([1.0, 2.0])
target = tf.Variable([0.0, 0.0])
sess = tf.Session()
for t in range(1000):
    if t % 100 == 0:
        blend = tf.multiply(online, 0.5)  # expect: RNC001
        sess.run(blend)
